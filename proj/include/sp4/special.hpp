#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

struct WhittakerIndex {
    double kappa = 0;
    double mu = 0;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponentially decaying solution of W'' + (-1/4 + kappa/y + (1/4 - mu^2)/y^2) W = 0,
// normalized by W ~ y^kappa e^{-y/2} as y -> infinity. Throws std::domain_error for y <= 0.
double whittaker_w(const WhittakerIndex& idx, double y);

// Same function evaluated with mu taken as given (no mu -> |mu| fold), so that
// W_{k,mu} and W_{k,-mu} go through different evaluation routes.
double whittaker_w_raw(const WhittakerIndex& idx, double y);

// dW/dy = ((y/2 - kappa) W_{kappa,mu} - W_{kappa+1,mu}) / y.
double whittaker_w_dy(const WhittakerIndex& idx, double y);

using WhittakerEvaluator = std::function<double(double kappa, double mu, double y)>;

struct ContiguousPoint {
    double y = 0;
    double f1 = 0;  // relative residuals
    double f2 = 0;
    double f4 = 0;
};

struct ContiguousReport {
    WhittakerIndex idx;
    std::vector<ContiguousPoint> points;
    double tolerance = 1e-8;
    bool pass = false;
};

// Residuals of the raising relation (f1), the lowering relation (f2) and mu -> -mu symmetry (f4).
// Derivatives come from Richardson-extrapolated central differences of `w`, independent of (f1).
ContiguousReport check_contiguous(const WhittakerIndex& idx, const std::vector<double>& y_grid,
                                  const WhittakerEvaluator& w = {});

// Richardson-extrapolated central difference; returns the estimate and writes an error estimate.
double richardson_derivative(const std::function<double(double)>& f, double x, double h, double* err = nullptr);

// Rising factorial x(x+1)...(x+n-1). Throws std::invalid_argument for n < 0.
Rational pochhammer(const Rational& x, int n);

}  // namespace sp4
