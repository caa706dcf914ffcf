#include "sp4/exact.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sp4 {

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = m;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ExactMatrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

ExactVector ExactMatrix::apply(const ExactVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    ExactVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in *");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
        }
    return m;
}

ExactMatrix operator*(const GaussianRational& s, ExactMatrix m) {
    for (auto& x : m.a_) x *= s;
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).str();
    }
    os << "]";
    return os.str();
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots) {
    ExactMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        GaussianRational inv = a(row, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c).is_zero()) continue;
            GaussianRational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    if (pivots) *pivots = piv;
    return a;
}

std::size_t ExactMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(*this, &piv);
    return piv.size();
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_ + r) = 1;
    }
    std::vector<std::size_t> piv;
    ExactMatrix red = rref(aug, &piv);
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw std::domain_error("singular matrix");
    ExactMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = red(r, cols_ + c);
    return inv;
}

namespace {

struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient; Bareiss guarantees divisibility.
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class re = a.re * b.re + a.im * b.im;
    mpz_class im = a.im * b.re - a.re * b.im;
    if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
        throw std::logic_error("fraction-free elimination lost exact divisibility");
    return {re / n, im / n};
}

}  // namespace

std::vector<ExactVector> kernel_basis(const ExactMatrix& system) {
    const std::size_t R = system.rows(), C = system.cols();
    std::vector<std::vector<GaussInt>> a(R, std::vector<GaussInt>(C));
    for (std::size_t r = 0; r < R; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < C; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), system(r, c).re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), system(r, c).im().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < C; ++c) {
            Rational x = system(r, c).re() * l, y = system(r, c).im() * l;
            a[r][c] = {x.get_num(), y.get_num()};
        }
    }

    // Forward fraction-free elimination; pivot = first nonzero entry scanning each column top-down.
    std::vector<std::size_t> piv;
    GaussInt prev{1, 0};
    std::size_t k = 0;
    for (std::size_t c = 0; c < C && k < R; ++c) {
        std::size_t p = k;
        while (p < R && a[p][c].is_zero()) ++p;
        if (p == R) continue;
        std::swap(a[p], a[k]);
        for (std::size_t r = k + 1; r < R; ++r) {
            for (std::size_t j = c + 1; j < C; ++j)
                a[r][j] = exact_div(sub(mul(a[k][c], a[r][j]), mul(a[r][c], a[k][j])), prev);
            a[r][c] = {0, 0};
        }
        prev = a[k][c];
        piv.push_back(c);
        ++k;
    }

    // Back substitution to reduced form over the rationals.
    ExactMatrix e(piv.size(), C);
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t c = 0; c < C; ++c) e(r, c) = GaussianRational(Rational(a[r][c].re), Rational(a[r][c].im));
    for (std::size_t r = piv.size(); r-- > 0;) {
        GaussianRational inv = e(r, piv[r]).inverse();
        for (std::size_t j = 0; j < C; ++j) e(r, j) *= inv;
        for (std::size_t u = 0; u < r; ++u) {
            if (e(u, piv[r]).is_zero()) continue;
            GaussianRational f = e(u, piv[r]);
            for (std::size_t j = 0; j < C; ++j)
                if (!e(r, j).is_zero()) e(u, j) -= f * e(r, j);
        }
    }

    std::vector<bool> is_pivot(C, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<ExactVector> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        ExactVector v(C);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -e(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

BivariatePolynomial BivariatePolynomial::monomial(int d1, int d2, const GaussianRational& c) {
    BivariatePolynomial p;
    p.add_term({d1, d2}, c);
    return p;
}

void BivariatePolynomial::add_term(const Key& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

GaussianRational BivariatePolynomial::coeff(int d1, int d2) const {
    auto it = terms_.find({d1, d2});
    return it == terms_.end() ? GaussianRational() : it->second;
}

int BivariatePolynomial::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

bool BivariatePolynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [k, c] : terms_) {
        if (d >= 0 && k.first + k.second != d) return false;
        d = k.first + k.second;
    }
    return true;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) p.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return p;
}

BivariatePolynomial poly_mul(const BivariatePolynomial& p, const BivariatePolynomial& q) { return p * q; }

}  // namespace sp4
