#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sp4 {

using Rational = mpq_class;

// n/d in lowest terms; mpq_class(n, d) alone does not canonicalize.
inline Rational rational(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// a + b*i with a, b exact rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re, const Rational& im = 0) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

using ExactVector = std::vector<GaussianRational>;

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(std::size_t n);
    // E_{ij} with 1-based indices, as in the usual matrix-unit notation.
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    ExactMatrix transpose() const;
    bool is_zero() const;
    ExactVector apply(const ExactVector& v) const;
    ExactMatrix inverse() const;  // throws std::domain_error when singular
    std::size_t rank() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix m);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

// Basis of the right null space, one vector per free column with that entry equal to 1.
std::vector<ExactVector> kernel_basis(const ExactMatrix& system);

// Reduced row echelon form; pivot columns returned through the second argument.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Polynomials in x1, x2 keyed by (deg x1, deg x2).
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;

    BivariatePolynomial() = default;
    static BivariatePolynomial monomial(int d1, int d2, const GaussianRational& c = 1);

    const std::map<Key, GaussianRational>& terms() const { return terms_; }
    GaussianRational coeff(int d1, int d2) const;
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    void add_term(const Key& k, const GaussianRational& c);
    std::map<Key, GaussianRational> terms_;
};

BivariatePolynomial poly_mul(const BivariatePolynomial& p, const BivariatePolynomial& q);

}  // namespace sp4
