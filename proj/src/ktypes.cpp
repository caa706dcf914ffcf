#include "sp4/ktypes.hpp"

#include <stdexcept>

namespace sp4 {

DominantWeight::DominantWeight(int l1, int l2) : L1(l1), L2(l2) {
    if (l1 < l2) throw std::invalid_argument("dominant weight needs L1 >= L2");
}

std::string to_string(Basis b) {
    switch (b) {
        case Basis::V: return "V";
        case Basis::U: return "U";
        case Basis::Vstar: return "Vstar";
        case Basis::Ustar: return "Ustar";
    }
    return "?";
}

std::string to_string(Generator g) {
    switch (g) {
        case Generator::Z: return "Z";
        case Generator::H: return "H";
        case Generator::X: return "X";
        case Generator::Xbar: return "Xbar";
        case Generator::Zprime: return "Zprime";
    }
    return "?";
}

KTypeVector KTypeVector::unit(const DominantWeight& w, Basis b, int k) {
    if (k < 0 || k > w.d()) throw std::out_of_range("basis index out of range");
    KTypeVector v{w, b, ExactVector(w.d() + 1)};
    v.coords[k] = 1;
    return v;
}

ExactMatrix action_matrix(Generator g, const DominantWeight& w, Basis b) {
    const int d = w.d();
    ExactMatrix m(d + 1, d + 1);
    auto set = [&](int to, int from, long c) {
        if (to >= 0 && to <= d && c != 0) m(to, from) = GaussianRational(c);
    };
    const bool dual = (b == Basis::Vstar || b == Basis::Ustar);
    if (g == Generator::Zprime) {
        if (b != Basis::U && b != Basis::Ustar) throw std::invalid_argument("Zprime rule is stated on U/Ustar only");
        for (int k = 0; k <= d; ++k) set(k, k, 2 * k - d);
        return m;
    }
    if (b != Basis::V && b != Basis::Vstar)
        throw std::invalid_argument(to_string(g) + " rule is stated on V/Vstar only");
    for (int k = 0; k <= d; ++k) {
        switch (g) {
            case Generator::Z: set(k, k, dual ? -(w.L1 + w.L2) : (w.L1 + w.L2)); break;
            case Generator::H: set(k, k, 2 * k - d); break;
            case Generator::X: set(k + 1, k, dual ? k + 1 : d - k); break;
            case Generator::Xbar: set(k - 1, k, dual ? d + 1 - k : k); break;
            default: break;
        }
    }
    return m;
}

KTypeVector act(Generator g, const KTypeVector& v) {
    if (static_cast<int>(v.coords.size()) != v.weight.d() + 1) throw std::invalid_argument("coordinate length");
    return {v.weight, v.basis, action_matrix(g, v.weight, v.basis).apply(v.coords)};
}

ExactMatrix beta_matrix(int n) {
    if (n < 0) throw std::invalid_argument("beta_matrix needs n >= 0");
    const auto I = GaussianRational::i();
    auto plus = BivariatePolynomial::monomial(1, 0) + BivariatePolynomial::monomial(0, 1, I);
    auto minus = BivariatePolynomial::monomial(1, 0) + BivariatePolynomial::monomial(0, 1, -I);
    ExactMatrix b(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        auto p = BivariatePolynomial::monomial(0, 0);
        for (int k = 0; k < i; ++k) p = poly_mul(p, plus);
        for (int k = 0; k < n - i; ++k) p = poly_mul(p, minus);
        for (int j = 0; j <= n; ++j) b(i, j) = p.coeff(j, n - j);
    }
    return b;
}

namespace {

struct Seq {
    ExactVector v;
    GaussianRational operator()(int k) const {
        return (k < 0 || k >= static_cast<int>(v.size())) ? GaussianRational() : v[k];
    }
};

}  // namespace

std::vector<BetaItem> check_beta_identities(int n, const BetaProvider& beta) {
    if (n < 2) throw std::invalid_argument("beta identities need n >= 2");
    const int d = n;
    const auto I = GaussianRational::i();
    const GaussianRational half(Rational(1, 2)), quarter(Rational(1, 4));
    const ExactMatrix bd = beta(d), bm = beta(d - 2);
    std::vector<std::string> names{"1", "2", "3", "4", "5a", "5b", "6", "7"};
    std::vector<bool> ok(names.size(), true);

    for (int e = 0; e <= d; ++e) {
        Seq f{ExactVector(d + 1)};
        f.v[e] = 1;
        Seq h{bd.apply(f.v)};
        for (int i = 0; i <= d; ++i) {
            auto sum = [&](auto g) {
                GaussianRational s;
                for (int j = 0; j <= d; ++j) s += bd(i, j) * g(j);
                return s;
            };
            GaussianRational gi(i), gd(d);
            auto l1 = sum([&](int j) { return GaussianRational(j * (j - 1)) * f(j - 1) + GaussianRational((d - j) * (d - j - 1)) * f(j + 1); });
            if (l1 != I * gi * (gd - gi) * (h(i - 1) - h(i + 1))) ok[0] = false;
            auto l2 = sum([&](int j) { return GaussianRational(j) * f(j - 1); });
            if (l2 != half * I * (gi * h(i - 1) + (gd - gi) * h(i) - (gd - 2 * gi) * h(i + 1))) ok[1] = false;
            auto l3 = sum([&](int j) { return GaussianRational(d - 2 * j) * f(j); });
            if (l3 != -(gd - gi) * h(i + 1) - gi * h(i - 1)) ok[2] = false;
            auto l4 = sum([&](int j) { return GaussianRational(d - j) * f(j + 1); });
            if (l4 != half * I * (gi * h(i - 1) - (gd - 2 * gi) * h(i) - (gd - gi) * h(i + 1))) ok[3] = false;
        }
        for (int i = 0; i <= d - 2; ++i) {
            auto sum = [&](auto g) {
                GaussianRational s;
                for (int j = 0; j <= d - 2; ++j) s += bm(i, j) * g(j);
                return s;
            };
            if (sum([&](int j) { return f(j); }) != -quarter * (h(i) + h(i + 2)) + half * h(i + 1)) ok[4] = false;
            if (sum([&](int j) { return f(j + 2); }) != quarter * (h(i) + h(i + 2)) + half * h(i + 1)) ok[5] = false;
            if (sum([&](int j) { return f(j + 1); }) != (h(i + 2) - h(i)) / (GaussianRational(4) * I)) ok[6] = false;
            auto l7 = sum([&](int j) { return GaussianRational(-j) * f(j) + GaussianRational(d - j - 2) * f(j + 2); });
            if (l7 != quarter * GaussianRational(-d + 2 * i + 2) * (h(i + 2) - h(i))) ok[7] = false;
        }
    }
    std::vector<BetaItem> out;
    for (std::size_t k = 0; k < names.size(); ++k) out.push_back({names[k], ok[k]});
    return out;
}

bool check_beta_item2_exchanged(int n, const BetaProvider& beta) {
    const int d = n;
    const auto I = GaussianRational::i();
    const GaussianRational half(Rational(1, 2));
    const ExactMatrix bd = beta(d);
    for (int e = 0; e <= d; ++e) {
        Seq f{ExactVector(d + 1)};
        f.v[e] = 1;
        Seq h{bd.apply(f.v)};
        for (int i = 0; i <= d; ++i) {
            GaussianRational s;
            for (int j = 0; j <= d; ++j) s += bd(i, j) * GaussianRational(j) * f(j - 1);
            GaussianRational gi(i), gd(d);
            if (s != half * I * (gi * h(i - 1) + (gd - 2 * gi) * h(i) - (gd - gi) * h(i + 1))) return false;
        }
    }
    return true;
}

KTypeVector change_basis(const KTypeVector& v, Basis to) {
    const int d = v.weight.d();
    if (static_cast<int>(v.coords.size()) != d + 1) throw std::invalid_argument("coordinate length");
    if (v.basis == to) return v;
    const ExactMatrix b = beta_matrix(d);
    // Dual side: u*-coefficients h = beta f. Primal side: u_i = sum_j beta_ij v_j, so c_V = beta^T c_U.
    ExactMatrix m;
    if (v.basis == Basis::Vstar && to == Basis::Ustar) m = b;
    else if (v.basis == Basis::Ustar && to == Basis::Vstar) m = b.inverse();
    else if (v.basis == Basis::U && to == Basis::V) m = b.transpose();
    else if (v.basis == Basis::V && to == Basis::U) m = b.transpose().inverse();
    else throw std::invalid_argument("change_basis converts V<->U or Vstar<->Ustar only");
    return {v.weight, to, m.apply(v.coords)};
}

GaussianRational dual_pairing(const KTypeVector& vstar, const KTypeVector& v) {
    if (vstar.basis != Basis::Vstar || v.basis != Basis::V) throw std::invalid_argument("pairing expects (Vstar, V)");
    const int d = v.weight.d();
    GaussianRational s;
    for (int k = 0; k <= d; ++k) {
        GaussianRational t = vstar.coords[k] * v.coords[d - k];
        s += (k % 2 == 0) ? t : -t;
    }
    return s;
}

}  // namespace sp4
