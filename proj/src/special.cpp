#include "sp4/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <quadmath.h>

namespace sp4 {

namespace {

using quad = __float128;

double exp_(double x) { return std::exp(x); }
double log_(double x) { return std::log(x); }
double log1p_(double x) { return std::log1p(x); }
double sinh_(double x) { return std::sinh(x); }
double cosh_(double x) { return std::cosh(x); }
double lgamma_(double x) { return std::lgamma(x); }
double fabs_(double x) { return std::fabs(x); }
quad exp_(quad x) { return expq(x); }
quad log_(quad x) { return logq(x); }
quad log1p_(quad x) { return log1pq(x); }
quad sinh_(quad x) { return sinhq(x); }
quad cosh_(quad x) { return coshq(x); }
quad lgamma_(quad x) { return lgammaq(x); }
quad fabs_(quad x) { return fabsq(x); }

template <class R> constexpr double quad_tol();
template <> constexpr double quad_tol<double>() { return 1e-14; }
template <> constexpr double quad_tol<quad>() { return 1e-29; }

// Cancellation factor above which a double result is recomputed in quad precision.
constexpr double kLossLimit = 1e4;

bool is_nonpositive_integer(double x, int* n) {
    double r = std::round(x);
    if (r > 0 || std::fabs(x - r) > 1e-12) return false;
    *n = static_cast<int>(-r);
    return true;
}

// log of the trapezoid sum for int_0^inf e^{-t} t^{a-1} (1+t/y)^c dt under t = exp(pi/2 sinh s).
template <class R>
R log_trapezoid(R a, R c, R y, R h) {
    const R half_pi = R(std::numbers::pi) / 2;
    auto g = [&](R s, bool* ok) {
        R lt = half_pi * sinh_(s);
        *ok = lt < 700;
        if (!*ok) return R(0);
        R t = exp_(lt);
        return -t + a * lt + c * log1p_(t / y) + log_(half_pi * cosh_(s));
    };
    std::vector<R> logs;
    R gmax = 0;
    bool have = false;
    for (int dir : {1, -1}) {
        R prev = 0;
        for (int k = (dir == 1 ? 0 : 1);; ++k) {
            R s = R(dir * k) * h;
            bool ok;
            R v = g(s, &ok);
            if (!ok) break;
            logs.push_back(v);
            if (!have || v > gmax) gmax = v, have = true;
            if ((k > 1 && v < gmax - 80 && v < prev) || fabs_(s) > 12) break;
            prev = v;
        }
    }
    R sum = 0;
    for (R v : logs) sum += exp_(v - gmax);
    return gmax + log_(sum * h);
}

template <class R>
R log_integral(R a, R c, R y) {
    R h = 0.5;
    R prev = log_trapezoid(a, c, y, h);
    for (int level = 0; level < 12; ++level) {
        h /= 2;
        R cur = log_trapezoid(a, c, y, h);
        if (fabs_(cur - prev) < R(quad_tol<R>())) return cur;
        prev = cur;
    }
    throw ConvergenceError("whittaker_w: quadrature did not converge");
}

template <class R>
R by_integral(R kappa, R mu, R y) {
    R a = mu - kappa + R(0.5);
    return exp_(-y / 2 + kappa * log_(y) - lgamma_(a) + log_integral(a, mu + kappa - R(0.5), y));
}

// e^{-y/2} y^{mu+1/2} U(-n, 1+2mu, y) with U(-n,b,y) = (-1)^n sum_k C(n,k) (b+k)_{n-k} (-y)^k.
template <class R>
R by_polynomial(R mu, int n, R y, double* loss) {
    R b = 1 + 2 * mu;
    R sum = 0, mag = 0, binom = 1, ypow = 1;
    for (int k = 0; k <= n; ++k) {
        R poch = 1;
        for (int j = 0; j < n - k; ++j) poch *= b + R(k + j);
        R term = ((n + k) % 2 == 0 ? R(1) : R(-1)) * binom * poch * ypow;
        sum += term;
        mag += fabs_(term);
        binom = binom * R(n - k) / R(k + 1);
        ypow *= y;
    }
    *loss = sum == 0 ? 0.0 : static_cast<double>(mag / fabs_(sum));
    return exp_(-y / 2 + (mu + R(0.5)) * log_(y)) * sum;
}

// Seed where the integral is valid and climb with W_{k+1} = (y-2k) W_k + (mu^2-(k-1/2)^2) W_{k-1}.
// `loss` accumulates the product of per-step cancellation factors.
template <class R>
R by_recurrence(R kappa, R mu, R y, int m, double* loss) {
    R k0 = kappa - R(m);
    R wm = by_integral(k0 - 1, mu, y), w = by_integral(k0, mu, y);
    double cond = 1;
    for (int s = 0; s < m; ++s) {
        R k = k0 + R(s);
        R t1 = (y - 2 * k) * w, t2 = (mu * mu - (k - R(0.5)) * (k - R(0.5))) * wm;
        R next = t1 + t2;
        if (next != 0) cond *= static_cast<double>((fabs_(t1) + fabs_(t2)) / fabs_(next));
        wm = w;
        w = next;
    }
    *loss = cond;
    return w;
}

double evaluate(double kappa, double mu, double y) {
    if (!(y > 0) || !std::isfinite(y)) throw std::domain_error("whittaker_w: y must be positive");
    if (!std::isfinite(kappa) || !std::isfinite(mu)) throw std::domain_error("whittaker_w: non-finite index");
    int n;
    double loss = 0;
    for (double sgn : {1.0, -1.0}) {
        if (is_nonpositive_integer(sgn * mu - kappa + 0.5, &n)) {
            double v = by_polynomial(sgn * mu, n, y, &loss);
            if (loss < kLossLimit) return v;
            return static_cast<double>(by_polynomial(quad(sgn * mu), n, quad(y), &loss));
        }
    }
    double a = mu - kappa + 0.5;
    if (a > 0) return by_integral(kappa, mu, y);
    int m = static_cast<int>(std::floor(1 - a)) + 1;
    double v = by_recurrence(kappa, mu, y, m, &loss);
    if (loss < kLossLimit) return v;
    return static_cast<double>(by_recurrence(quad(kappa), quad(mu), quad(y), m, &loss));
}

}  // namespace

double whittaker_w(const WhittakerIndex& idx, double y) { return evaluate(idx.kappa, std::fabs(idx.mu), y); }

double whittaker_w_raw(const WhittakerIndex& idx, double y) { return evaluate(idx.kappa, idx.mu, y); }

double whittaker_w_dy(const WhittakerIndex& idx, double y) {
    double w = whittaker_w(idx, y);
    double wp = whittaker_w({idx.kappa + 1, idx.mu}, y);
    return ((y / 2 - idx.kappa) * w - wp) / y;
}

double richardson_derivative(const std::function<double(double)>& f, double x, double h, double* err) {
    constexpr int ntab = 10;
    constexpr double con = 1.4, con2 = con * con, safe = 2.0;
    double a[ntab][ntab];
    double best = 0, e = std::numeric_limits<double>::max();
    a[0][0] = (f(x + h) - f(x - h)) / (2 * h);
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = (f(x + h) - f(x - h)) / (2 * h);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1);
            fac *= con2;
            double errt = std::max(std::fabs(a[j][i] - a[j - 1][i]), std::fabs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= e) {
                e = errt;
                best = a[j][i];
            }
        }
        if (std::fabs(a[i][i] - a[i - 1][i - 1]) >= safe * e) break;
    }
    if (err) *err = e;
    return best;
}

ContiguousReport check_contiguous(const WhittakerIndex& idx, const std::vector<double>& y_grid,
                                  const WhittakerEvaluator& w_in) {
    WhittakerEvaluator w = w_in ? w_in : [](double k, double m, double y) { return whittaker_w_raw({k, m}, y); };
    const double k = idx.kappa, mu = idx.mu;
    ContiguousReport rep;
    rep.idx = idx;
    rep.pass = !y_grid.empty();
    for (double y : y_grid) {
        double W = w(k, mu, y), Wp = w(k + 1, mu, y), Wm = w(k - 1, mu, y);
        // Step below both the distance to the singular point y = 0 and the e^{-y/2} scale.
        double dW = richardson_derivative([&](double t) { return w(k, mu, t); }, y, 0.05 * std::min(y, 2.0));
        // Scale includes |W| and |W_{k+-1}| so points where every term vanishes are not 0/0.
        const double base = std::fabs(W) + std::fabs(Wp) + std::fabs(Wm);
        auto rel = [base](std::initializer_list<double> terms) {
            double s = 0, a = base;
            for (double t : terms) s += t, a += std::fabs(t);
            return a == 0 ? 0.0 : std::fabs(s) / a;
        };
        ContiguousPoint pt;
        pt.y = y;
        pt.f1 = rel({y * dW, (k - y / 2) * W, Wp});
        pt.f2 = rel({y * dW, (y / 2 - k) * W, (mu * mu - (k - 0.5) * (k - 0.5)) * Wm});
        double Wneg = w(k, -mu, y);
        double scale = std::max(std::fabs(W), std::fabs(Wneg));
        pt.f4 = scale == 0 ? 0.0 : std::fabs(W - Wneg) / scale;
        if (!(pt.f1 < rep.tolerance && pt.f2 < rep.tolerance && pt.f4 < rep.tolerance)) rep.pass = false;
        rep.points.push_back(pt);
    }
    return rep;
}

Rational pochhammer(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be nonnegative");
    Rational r = 1;
    for (int j = 0; j < n; ++j) r *= x + j;
    return r;
}

}  // namespace sp4
