#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <type_traits>
#include <vector>

#include "sp4/exact.hpp"
#include "sp4/special.hpp"

namespace sp4 {

// W_{kappa,mu}(t * y1)
struct WFactor {
    double kappa = 0;
    double mu = 0;
    double t = 1;
    friend auto operator<=>(const WFactor&, const WFactor&) = default;
};

template <class C>
struct RadialTerm {
    C coeff{};
    Rational p{0};  // power of y1
    Rational q{0};  // power of y2
    double r = 0;   // exp(r * y1)
    std::optional<WFactor> w;
};

// Memo for W evaluations at one grid point; keys are (kappa, mu, argument).
class WCache {
public:
    double get(double kappa, double mu, double z) {
        auto key = std::make_tuple(kappa, mu, z);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        double v = whittaker_w({kappa, mu}, z);
        memo_.emplace(key, v);
        return v;
    }

private:
    std::map<std::tuple<double, double, double>, double> memo_;
};

namespace detail {

template <class C>
C from_rational(const Rational& x) {
    if constexpr (std::is_same_v<C, GaussianRational>) return GaussianRational(x);
    else return C(x.get_d());
}

template <class C>
C from_complex(std::complex<double> z) {
    if constexpr (std::is_same_v<C, GaussianRational>) {
        (void)z;
        throw std::logic_error("inexact coefficient in an exact radial function");
    } else {
        return C(z);
    }
}

template <class C>
std::complex<double> to_complex(const C& c) {
    if constexpr (std::is_same_v<C, GaussianRational>) return c.to_complex();
    else return std::complex<double>(c);
}

template <class C>
bool is_zero(const C& c) {
    if constexpr (std::is_same_v<C, GaussianRational>) return c.is_zero();
    else return c == C(0);
}

}  // namespace detail

// Finite sum of coeff * y1^p * y2^q * exp(r y1) * [W_{kappa,mu}(t y1)], with y1 = a1/a2, y2 = a1 a2.
// dy1/dy2 are the Euler operators y_i d/dy_i; the W factor is differentiated with
// z W'(z) = (z/2 - kappa) W_{kappa}(z) - W_{kappa+1}(z).
template <class C>
class RadialFunction {
public:
    using Term = RadialTerm<C>;
    std::vector<Term> terms;

    static RadialFunction monomial(const C& c, const Rational& p, const Rational& q, double r = 0) {
        RadialFunction f;
        f.terms.push_back({c, p, q, r, std::nullopt});
        return f;
    }

    // a1^m a2^n expressed in (y1, y2)
    static RadialFunction a_monomial(const C& c, int m, int n, double r = 0) {
        return monomial(c, rational(m - n, 2), rational(m + n, 2), r);
    }

    static RadialFunction whittaker(const C& c, const Rational& p, const Rational& q, const WFactor& w, double r = 0) {
        RadialFunction f;
        f.terms.push_back({c, p, q, r, w});
        return f;
    }

    bool exact_capable() const {
        for (const auto& t : terms)
            if (t.w || t.r != 0) return false;
        return true;
    }

    RadialFunction& operator+=(const RadialFunction& o) {
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    friend RadialFunction operator+(RadialFunction a, const RadialFunction& b) { return a += b; }
    friend RadialFunction operator-(RadialFunction a, const RadialFunction& b) { return a += b.scaled(C(-1)); }

    RadialFunction scaled(const C& s) const {
        RadialFunction f = *this;
        for (auto& t : f.terms) t.coeff = t.coeff * s;
        return f;
    }

    RadialFunction mul_y1() const {
        RadialFunction f = *this;
        for (auto& t : f.terms) t.p += 1;
        return f;
    }

    RadialFunction dy1() const {
        RadialFunction f;
        for (const auto& t : terms) {
            if (!t.w) {
                if (sgn(t.p) != 0) f.terms.push_back({t.coeff * detail::from_rational<C>(t.p), t.p, t.q, t.r, std::nullopt});
                if (t.r != 0) f.terms.push_back({t.coeff * detail::from_complex<C>(t.r), t.p + 1, t.q, t.r, std::nullopt});
                continue;
            }
            const WFactor& w = *t.w;
            double base = t.p.get_d() - w.kappa;
            if (base != 0) f.terms.push_back({t.coeff * detail::from_complex<C>(base), t.p, t.q, t.r, w});
            double lin = t.r + w.t / 2;
            if (lin != 0) f.terms.push_back({t.coeff * detail::from_complex<C>(lin), t.p + 1, t.q, t.r, w});
            f.terms.push_back({t.coeff * C(-1), t.p, t.q, t.r, WFactor{w.kappa + 1, w.mu, w.t}});
        }
        return f;
    }

    RadialFunction dy2() const {
        RadialFunction f;
        for (const auto& t : terms)
            if (sgn(t.q) != 0) f.terms.push_back({t.coeff * detail::from_rational<C>(t.q), t.p, t.q, t.r, t.w});
        return f;
    }

    // a1 d/da1 = dy1 + dy2, a2 d/da2 = -dy1 + dy2
    RadialFunction d1() const { return dy1() + dy2(); }
    RadialFunction d2() const { return dy2() - dy1(); }

    // Like terms combined, zero coefficients dropped.
    RadialFunction merged() const {
        using Key = std::tuple<Rational, Rational, double, std::optional<WFactor>>;
        auto less = [](const Key& a, const Key& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
            return std::get<3>(a) < std::get<3>(b);
        };
        std::map<Key, C, decltype(less)> acc(less);
        for (const auto& t : terms) {
            Key k{t.p, t.q, t.r, t.w};
            auto it = acc.find(k);
            if (it == acc.end()) acc.emplace(k, t.coeff);
            else it->second = it->second + t.coeff;
        }
        RadialFunction f;
        for (const auto& [k, c] : acc)
            if (!detail::is_zero(c)) f.terms.push_back({c, std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
        return f;
    }

    bool is_zero() const { return merged().terms.empty(); }

    std::complex<double> term_value(const Term& t, double y1, double y2, WCache* cache) const {
        double mag = std::exp(t.p.get_d() * std::log(y1) + t.q.get_d() * std::log(y2) + t.r * y1);
        if (t.w) {
            double z = t.w->t * y1;
            mag *= cache ? cache->get(t.w->kappa, t.w->mu, z) : whittaker_w({t.w->kappa, t.w->mu}, z);
        }
        return detail::to_complex(t.coeff) * mag;
    }

    std::complex<double> eval(double y1, double y2, WCache* cache = nullptr) const {
        std::complex<double> s = 0;
        for (const auto& t : terms) s += term_value(t, y1, y2, cache);
        return s;
    }

    // Sum of |term| at the point; the scale for relative residuals.
    double magnitude(double y1, double y2, WCache* cache = nullptr) const {
        double s = 0;
        for (const auto& t : terms) s += std::abs(term_value(t, y1, y2, cache));
        return s;
    }
};

using NumericRadial = RadialFunction<std::complex<double>>;
using ExactRadial = RadialFunction<GaussianRational>;

inline NumericRadial to_numeric(const ExactRadial& f) {
    NumericRadial g;
    for (const auto& t : f.terms) g.terms.push_back({t.coeff.to_complex(), t.p, t.q, t.r, t.w});
    return g;
}

}  // namespace sp4
