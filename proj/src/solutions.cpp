#include "sp4/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sp4/ktypes.hpp"

namespace sp4 {

namespace {

constexpr double kPi = std::numbers::pi;

Rational inv_factorial(int n) {
    mpz_class f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return Rational(mpz_class(1), f);
}

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

template <class C>
RadialFunction<C> at(const std::vector<RadialFunction<C>>& v, int k) {
    if (k < 0 || k >= static_cast<int>(v.size())) return {};
    return v[k];
}

template <class C>
C num(long k) {
    return detail::from_rational<C>(Rational(k));
}

template <class C>
using Equations = std::vector<std::pair<std::pair<std::string, int>, RadialFunction<C>>>;

// (A_i), (B_i), (C_i) for u*-coefficients of the type II system with Blattner parameter (L1, L2).
template <class C>
Equations<C> ustar_equations(const std::vector<RadialFunction<C>>& phi, int L1, int L2, double c0) {
    using RF = RadialFunction<C>;
    const int d = L1 - L2;
    auto t = [&](const RF& f) { return c0 == 0 ? RF{} : f.mul_y1().scaled(detail::from_complex<C>(4 * kPi * c0)); };
    auto lin = [&](const RF& f, long k) { return f.scaled(num<C>(k)); };
    Equations<C> out;
    for (int i = 0; i <= d - 2; ++i) {
        RF a0 = at(phi, i), a1 = at(phi, i + 1), a2 = at(phi, i + 2);
        RF A = a0.d1() - a0.d2() + lin(a0, -L1 + L2 + 2 * i) - t(a0) - lin(a1, 2L * (L1 + L2)) + a2.d1() - a2.d2() +
               lin(a2, L1 - L2 - 2 * i - 4) + t(a2);
        out.push_back({{"A", i}, A});
        RF B = a1.d1() + a1.d2() + lin(a1, -L1 + L2 - 2);
        out.push_back({{"B", i}, B});
    }
    for (int i = 0; i <= d; ++i) {
        RF m = at(phi, i - 1), z = at(phi, i), p = at(phi, i + 1);
        RF Cm = m.d2() - m.d1() + t(m) + lin(m, L1 - L2 - 2 * i + 2);
        RF Cz = z.d1() + z.d2() + lin(z, -L1 - L2 - 2);
        RF Cp = p.d1() - p.d2() + t(p) + lin(p, L1 - L2 - 2 * i - 2);
        out.push_back({{"C", i}, lin(Cm, i) + lin(Cz, L1 - L2 - 2 * i) + lin(Cp, L1 - L2 - i)});
    }
    return out;
}

// (A'_i), (B'_i), (C'_j) for v*-coefficients of the type II system.
template <class C>
Equations<C> vstar_equations(const std::vector<RadialFunction<C>>& f, int L1, int L2, double c0) {
    using RF = RadialFunction<C>;
    const int d = L1 - L2;
    auto P = [&](const RF& g, double scale) {
        return c0 == 0 ? RF{} : g.mul_y1().scaled(detail::from_complex<C>(std::complex<double>(0, scale * c0)));
    };
    auto lin = [&](const RF& g, long k) { return g.scaled(num<C>(k)); };
    Equations<C> out;
    for (int i = 0; i <= d - 2; ++i) {
        RF f0 = at(f, i), f1 = at(f, i + 1), f2 = at(f, i + 2);
        RF A = f0.d1() + lin(f0, L2 - i - 2) - P(f1, 4 * kPi) + f2.d2() + lin(f2, L1 - i - 2);
        out.push_back({{"A'", i}, A});
        RF B = f0.d2() + lin(f0, -L1 + i) + P(f1, 4 * kPi) + f2.d1() + lin(f2, -2 * L1 + L2 + i);
        out.push_back({{"B'", i}, B});
    }
    for (int j = 0; j <= d; ++j) {
        RF m = at(f, j - 1), z = at(f, j), p = at(f, j + 1);
        RF Cm = m.d2() + lin(m, -L1 + j - 1);
        RF Cp = p.d1() + lin(p, -L1 + j - 1);
        RF eq = lin(Cm, j) - P(z, 2 * kPi * (L1 - L2 - 2 * j)) - lin(Cp, L1 - L2 - j);
        out.push_back({{"C'", j}, eq});
    }
    return out;
}

// Type III data moved onto the type II system of (-L2, -L1): psi_i = (-1)^i phi_i on u*,
// psi_j = (-1)^j phi_{d-j} on v*.
template <class C>
Equations<C> system_for(const CoefficientFamily<C>& fam, const HCParameter& p, double c0) {
    require_large(p, "radial_system_residual");
    const BlattnerParameter b = blattner(p);
    if (static_cast<int>(fam.entries.size()) != b.d + 1)
        throw std::invalid_argument("family length " + std::to_string(fam.entries.size()) + " != d+1 = " +
                                    std::to_string(b.d + 1));
    int L1 = b.L1, L2 = b.L2;
    std::vector<RadialFunction<C>> phi = fam.entries;
    if (p.xi_type == XiType::III) {
        L1 = -b.L2, L2 = -b.L1;
        std::vector<RadialFunction<C>> psi(b.d + 1);
        for (int i = 0; i <= b.d; ++i) {
            const auto& src = fam.basis == FamilyBasis::Ustar ? phi[i] : phi[b.d - i];
            psi[i] = src.scaled(num<C>(sign_pow(i)));
        }
        phi = std::move(psi);
    }
    return fam.basis == FamilyBasis::Ustar ? ustar_equations(phi, L1, L2, c0) : vstar_equations(phi, L1, L2, c0);
}

void finish(ResidualReport& rep) {
    rep.max_abs = rep.max_rel = 0;
    for (const auto& e : rep.equations) {
        rep.max_abs = std::max(rep.max_abs, e.max_abs);
        rep.max_rel = std::max(rep.max_rel, e.max_rel);
    }
}

template <class C>
CoefficientFamily<C> make_family(FamilyBasis b, int d, std::string label) {
    CoefficientFamily<C> f;
    f.basis = b;
    f.entries.resize(d + 1);
    f.label = std::move(label);
    return f;
}

NumericFamily transform(const NumericFamily& f, const ExactMatrix& m, FamilyBasis to) {
    NumericFamily g = make_family<std::complex<double>>(to, static_cast<int>(f.entries.size()) - 1, f.label);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) g.entries[r] += f.entries[c].scaled(m(r, c).to_complex());
    return g;
}

}  // namespace

std::string to_string(FamilyBasis b) { return b == FamilyBasis::Ustar ? "Ustar" : "Vstar"; }

NumericFamily to_numeric(const ExactFamily& f) {
    NumericFamily g;
    g.basis = f.basis;
    g.label = f.label;
    for (const auto& e : f.entries) g.entries.push_back(to_numeric(e));
    return g;
}

NumericFamily to_vstar(const NumericFamily& f) {
    if (f.basis == FamilyBasis::Vstar) return f;
    return transform(f, beta_matrix(static_cast<int>(f.entries.size()) - 1).inverse(), FamilyBasis::Vstar);
}

NumericFamily to_ustar(const NumericFamily& f) {
    if (f.basis == FamilyBasis::Ustar) return f;
    return transform(f, beta_matrix(static_cast<int>(f.entries.size()) - 1), FamilyBasis::Ustar);
}

NumericFamily siegel_solution(const HCParameter& p, double c0, double C0, double C1) {
    require_large(p, "siegel_solution");
    if (c0 == 0) throw UnsupportedType("siegel_solution needs c0 != 0 (use the Borel operations for c0 = 0)");
    const BlattnerParameter b = blattner(p);
    const int d = b.d, L1 = b.L1, L2 = b.L2;
    const bool II = p.xi_type == XiType::II;
    const bool pos = c0 > 0;
    const double ac0 = std::fabs(c0);
    const double mu = II ? (L1 + L2 - 1) / 2.0 : (L1 + L2 + 1) / 2.0;
    std::vector<Rational> alpha(d + 1, Rational(0)), beta(d + 1, Rational(0));
    for (int i = 0; i <= d; ++i) {
        if (II && pos && i >= L1) alpha[i] = inv_factorial(i - L1);
        if (II && !pos && i <= -L2) alpha[i] = inv_factorial(-L2 - i);
        // Support -L2 <= i <= d: (i + L2)! is only defined there.
        if (!II && pos && i >= -L2) alpha[i] = sign_pow(i) * inv_factorial(i + L2);
        if (!II && !pos && i <= L1) alpha[i] = sign_pow(i) * inv_factorial(L1 - i);
    }
    if (pos) beta[d] = II ? 1 : sign_pow(d);
    else beta[0] = 1;
    const int m = II ? L1 + 1 : -L2 + 1, n = II ? L2 + 1 : -L1 + 1;

    NumericFamily fam = make_family<std::complex<double>>(FamilyBasis::Ustar, d, "siegel");
    for (int i = 0; i <= d; ++i) {
        if (C0 != 0 && sgn(alpha[i]) != 0) {
            WFactor w{(pos ? 1 : -1) * (i - d / 2.0), mu, 4 * kPi * ac0};
            fam.entries[i] += NumericRadial::whittaker(C0 * alpha[i].get_d(), 0, rational(d + 2, 2), w);
        }
        if (C1 != 0 && sgn(beta[i]) != 0)
            fam.entries[i] += NumericRadial::a_monomial(C1 * beta[i].get_d(), m, n, -2 * kPi * ac0);
    }
    return fam;
}

std::string to_string(BorelFamily w) { return "f" + std::to_string(static_cast<int>(w)); }

BorelFamily borel_family_from_string(const std::string& s) {
    for (auto w : kBorelFamilies)
        if (to_string(w) == s) return w;
    throw std::invalid_argument("unknown Borel family: " + s);
}

namespace {

// Stated coefficients on the ansatz coordinates 3*i + m.
ExactVector stated_borel_vector(const HCParameter& p, BorelFamily which, int* monomial) {
    const BlattnerParameter b = blattner(p);
    const int d = b.d, L2 = b.L2, delta = d % 2;
    const bool II = p.xi_type == XiType::II;
    ExactVector v(3 * (d + 1));
    const Rational half_shift(-d + 2, 2);
    switch (which) {
        case BorelFamily::f0:
            *monomial = 0;
            v[3 * (II ? 0 : d)] = 1;
            break;
        case BorelFamily::f1:
            *monomial = 1;
            for (int i = 0; i <= d; i += 2) v[3 * i + 1] = sign_pow(i / 2);
            break;
        case BorelFamily::f2:
            *monomial = 1;
            for (int i = 1; i <= d; i += 2) v[3 * i + 1] = sign_pow((i - 1) / 2);
            break;
        case BorelFamily::f3:
            *monomial = 2;
            for (int i = 0; i <= std::min(d, d + delta * (2 * L2 - 1)); i += 2) {
                Rational c = pochhammer(half_shift, i / 2);
                c *= Rational(mpz_class(1) << (i / 2));
                v[3 * i + 2] = GaussianRational(c);
            }
            break;
        case BorelFamily::f4:
            *monomial = 2;
            for (int i = 1; i <= std::min(d, d + (1 - delta) * (2 * L2 - 1)); i += 2) {
                Rational c = pochhammer(half_shift, (i - 1) / 2);
                c *= Rational(mpz_class(1) << ((i - 1) / 2));
                v[3 * i + 2] = GaussianRational(c);
            }
            break;
    }
    return v;
}

ExactFamily family_from_vector(const BorelAnsatz& a, const ExactVector& v, std::string label) {
    ExactFamily f = make_family<GaussianRational>(FamilyBasis::Vstar, a.d, std::move(label));
    for (int i = 0; i <= a.d; ++i)
        for (int m = 0; m < 3; ++m)
            if (!v[3 * i + m].is_zero())
                f.entries[i] += ExactRadial::a_monomial(v[3 * i + m], a.monomials[m].first, a.monomials[m].second);
    return f;
}

}  // namespace

ExactFamily borel_solution(const HCParameter& p, BorelFamily which) {
    require_large(p, "borel_solution");
    int m;
    ExactVector v = stated_borel_vector(p, which, &m);
    return family_from_vector(borel_ansatz(p), v, to_string(which));
}

std::vector<GridPoint> default_radial_grid() {
    std::vector<GridPoint> g;
    for (double y1 : {0.2, 0.5, 1.0, 2.0, 5.0})
        for (double y2 : {0.5, 1.0, 2.0}) g.push_back({std::sqrt(y1 * y2), std::sqrt(y2 / y1)});
    return g;
}

template <class C>
static ResidualReport evaluate_residual(const Equations<C>& eqs, FamilyBasis basis, const std::vector<GridPoint>& grid,
                                        bool exact) {
    ResidualReport rep;
    rep.system = basis == FamilyBasis::Ustar ? "ustar" : "vstar";
    rep.exact_path = exact;
    rep.exact_zero = exact;
    std::vector<WCache> caches(grid.size());
    for (const auto& [id, eq] : eqs) {
        EquationResidual er;
        er.name = id.first;
        er.index = id.second;
        RadialFunction<C> reduced = exact ? eq.merged() : eq;
        if (exact) {
            er.exact_zero = reduced.terms.empty();
            if (!er.exact_zero) rep.exact_zero = false;
        }
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const auto [a1, a2] = grid[k];
            const double y1 = a1 / a2, y2 = a1 * a2;
            double abs = std::abs(reduced.eval(y1, y2, &caches[k]));
            double mag = eq.magnitude(y1, y2, &caches[k]);
            er.max_abs = std::max(er.max_abs, abs);
            er.max_rel = std::max(er.max_rel, mag == 0 ? 0.0 : abs / mag);
        }
        rep.equations.push_back(er);
    }
    finish(rep);
    rep.pass = exact ? rep.exact_zero : rep.max_rel < rep.tolerance;
    return rep;
}

ResidualReport radial_system_residual(const NumericFamily& fam, const HCParameter& p, const DegenerateCharacter& chi,
                                      const std::vector<GridPoint>& grid) {
    chi.validate();
    return evaluate_residual(system_for(fam, p, chi.c0), fam.basis, grid, false);
}

ResidualReport radial_system_residual(const ExactFamily& fam, const HCParameter& p, const DegenerateCharacter& chi,
                                      const std::vector<GridPoint>& grid) {
    chi.validate();
    bool exact = chi.c0 == 0;
    for (const auto& e : fam.entries) exact = exact && e.exact_capable();
    if (!exact) return radial_system_residual(to_numeric(fam), p, chi, grid);
    return evaluate_residual(system_for(fam, p, 0.0), fam.basis, grid, true);
}

BorelAnsatz borel_ansatz(const HCParameter& p) {
    require_large(p, "borel_ansatz");
    const BlattnerParameter b = blattner(p);
    const int d = b.d;
    const bool II = p.xi_type == XiType::II;
    // The type II system of (L1, L2); for type III, (L1, L2) = (-L2', -L1') acting on psi_j = (-1)^j phi_{d-j}.
    const int L1 = II ? b.L1 : -b.L2, L2 = II ? b.L2 : -b.L1;
    BorelAnsatz a;
    a.d = d;
    a.monomials = {{{2 - L2, L1}, {L1 + 1, L2 + 1}, {L1 + 1, -L2 + 1}}};
    auto col = [&](int j, int m) {
        int i = II ? j : d - j;
        return std::make_pair(3 * i + m, II ? 1 : sign_pow(j));
    };
    std::vector<ExactVector> rows;
    auto add = [&](ExactVector& r, int j, int m, long coef) {
        if (j < 0 || j > d || coef == 0) return;
        auto [c, s] = col(j, m);
        r[c] += GaussianRational(coef * s);
    };
    for (int m = 0; m < 3; ++m) {
        const int pe = a.monomials[m].first, qe = a.monomials[m].second;  // d1 -> pe, d2 -> qe
        for (int i = 0; i <= d - 2; ++i) {
            ExactVector r(3 * (d + 1));
            add(r, i, m, pe + L2 - i - 2);
            add(r, i + 2, m, qe + L1 - i - 2);
            rows.push_back(r);
            ExactVector s(3 * (d + 1));
            add(s, i, m, qe - L1 + i);
            add(s, i + 2, m, pe - 2 * L1 + L2 + i);
            rows.push_back(s);
        }
        for (int j = 0; j <= d; ++j) {
            ExactVector r(3 * (d + 1));
            add(r, j - 1, m, static_cast<long>(j) * (qe - L1 + j - 1));
            add(r, j + 1, m, -static_cast<long>(L1 - L2 - j) * (pe - L1 + j - 1));
            rows.push_back(r);
        }
    }
    a.system = ExactMatrix(rows.size(), 3 * (d + 1));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a.system(r, c) = rows[r][c];
    // Report exponents in the caller's own coordinates; the monomials coincide under the transport.
    return a;
}

std::vector<ExactFamily> borel_recurrence_solve(const HCParameter& p) {
    BorelAnsatz a = borel_ansatz(p);
    std::vector<ExactFamily> out;
    int k = 0;
    for (const auto& v : kernel_basis(a.system)) out.push_back(family_from_vector(a, v, "kernel" + std::to_string(k++)));
    return out;
}

std::vector<BorelComparison> compare_borel_formulas(const HCParameter& p) {
    BorelAnsatz a = borel_ansatz(p);
    const auto kernel = kernel_basis(a.system);
    const int n = 3 * (a.d + 1);
    std::vector<BorelComparison> out;
    for (auto which : kBorelFamilies) {
        BorelComparison cmp;
        cmp.which = which;
        ExactVector v = stated_borel_vector(p, which, &cmp.monomial);
        // Span membership: appending v must not raise the rank.
        ExactMatrix with(kernel.size() + 1, n), without(std::max<std::size_t>(kernel.size(), 1), n);
        for (std::size_t r = 0; r < kernel.size(); ++r)
            for (int c = 0; c < n; ++c) with(r, c) = without(r, c) = kernel[r][c];
        for (int c = 0; c < n; ++c) with(kernel.size(), c) = v[c];
        cmp.match = with.rank() == (kernel.empty() ? 0 : without.rank());
        cmp.zero_family = std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); });

        // Kernel solutions supported on the same monomial and index parity as the stated family.
        int parity = -1;
        for (int i = 0; i <= a.d && parity < 0; ++i)
            if (!v[3 * i + cmp.monomial].is_zero()) parity = i % 2;
        if (parity < 0) parity = (which == BorelFamily::f2 || which == BorelFamily::f4) ? 1 : 0;
        if (which == BorelFamily::f0) parity = -1;
        std::vector<int> cols;
        for (int i = 0; i <= a.d; ++i)
            if (parity < 0 || i % 2 == parity) cols.push_back(3 * i + cmp.monomial);
        ExactMatrix sub(a.system.rows(), cols.size());
        for (std::size_t r = 0; r < a.system.rows(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) sub(r, c) = a.system(r, cols[c]);
        auto sk = kernel_basis(sub);
        cmp.stated.assign(a.d + 1, GaussianRational());
        cmp.kernel_derived.assign(a.d + 1, GaussianRational());
        for (int i = 0; i <= a.d; ++i) cmp.stated[i] = v[3 * i + cmp.monomial];
        if (!sk.empty()) {
            for (std::size_t c = 0; c < cols.size(); ++c) cmp.kernel_derived[cols[c] / 3] = sk[0][c];
            int lead = -1;
            for (int i = 0; i <= a.d && lead < 0; ++i)
                if (!cmp.stated[i].is_zero() && !cmp.kernel_derived[i].is_zero()) lead = i;
            if (lead >= 0) {
                GaussianRational s = cmp.stated[lead] / cmp.kernel_derived[lead];
                for (auto& z : cmp.kernel_derived) z *= s;
            }
        }
        if (!cmp.match)
            for (int i = 0; i <= a.d; ++i)
                if (cmp.stated[i] != cmp.kernel_derived[i]) {
                    cmp.offending_index = i;
                    break;
                }
        out.push_back(cmp);
    }
    return out;
}

RaisingLoweringReport raising_lowering_check(const HCParameter& p, double c0, const std::vector<double>& y1_grid,
                                             double rhs_mu_offset) {
    require_large(p, "raising_lowering_check");
    if (c0 == 0) throw UnsupportedType("raising_lowering_check needs c0 != 0");
    const BlattnerParameter b = blattner(p);
    const int d = b.d;
    const bool II = p.xi_type == XiType::II, pos = c0 > 0;
    const double mu = II ? (b.L1 + b.L2 - 1) / 2.0 : (b.L1 + b.L2 + 1) / 2.0;
    const double mu_r = mu + rhs_mu_offset;
    const double t = 4 * kPi * std::fabs(c0);
    RaisingLoweringReport rep;
    rep.c0 = c0;
    rep.shifts_pass = true;
    rep.printed_coefficient_checked = !pos;
    rep.printed_coefficient_matches = true;

    for (int i = 0; i < d; ++i) {
        const double kappa = i - d / 2.0;
        const double kf = pos ? kappa : -kappa;
        ShiftCheck sc;
        sc.i = i;
        for (double y1 : y1_grid) {
            auto F = [&](double s) { return whittaker_w({kf, mu}, t * s); };
            double dF = richardson_derivative(F, y1, 0.05 * std::min(y1, 2.0 / t));
            double Fv = F(y1);
            // y1 d/dy1 + sqrt(-1)(2 pi c0 sqrt(-1)) y1 + (i - d/2) = y1 d/dy1 - 2 pi c0 y1 + kappa
            double lhs_terms[3] = {y1 * dF, -2 * kPi * c0 * y1 * Fv, kappa * Fv};
            double lhs = lhs_terms[0] + lhs_terms[1] + lhs_terms[2];
            double scale = std::fabs(lhs_terms[0]) + std::fabs(lhs_terms[1]) + std::fabs(lhs_terms[2]) + std::fabs(Fv);
            double rhs;
            if (pos) {
                rhs = -whittaker_w({kappa + 1, mu_r}, t * y1);
            } else {
                double next = whittaker_w({-(kappa + 1), mu_r}, t * y1);
                double coef = mu_r * mu_r - (i - (d - 1) / 2.0) * (i - (d - 1) / 2.0);
                rhs = -coef * next;
                double printed = mu * mu - (i - (d + 1) / 2.0) * (i - (d + 1) / 2.0);
                double rp = -printed * next;
                double relp = std::fabs(lhs - rp) / (scale + std::fabs(rp));
                rep.printed_coefficient_max_rel = std::max(rep.printed_coefficient_max_rel, relp);
            }
            sc.max_rel = std::max(sc.max_rel, std::fabs(lhs - rhs) / (scale + std::fabs(rhs)));
        }
        sc.pass = sc.max_rel < rep.tolerance;
        rep.shifts_pass = rep.shifts_pass && sc.pass;
        rep.shifts.push_back(sc);
    }
    if (!pos) rep.printed_coefficient_matches = rep.printed_coefficient_max_rel < rep.tolerance;

    // Anchor: the coefficient reduces to y2^{(d+2)/2} y1^{e} exp(-2 pi |c0| y1), up to (4 pi |c0|)^e.
    const int sum = b.L1 + b.L2;
    rep.anchor_index = II ? (pos ? b.L1 : -b.L2) : (pos ? -b.L2 : b.L1);
    rep.anchor_exponent = II ? rational(sum, 2) : rational(-sum, 2);
    rep.anchor_constant = std::pow(t, rep.anchor_exponent.get_d());
    const double ka = (pos ? 1 : -1) * (rep.anchor_index - d / 2.0);
    rep.anchor_pass = rep.anchor_index >= 0 && rep.anchor_index <= d;
    for (double y1 : y1_grid)
        for (double y2 : {0.5, 1.0, 2.0}) {
            double lhs = std::pow(y2, (d + 2) / 2.0) * whittaker_w({ka, mu}, t * y1);
            double stated = std::pow(y2, (d + 2) / 2.0) * std::pow(y1, rep.anchor_exponent.get_d()) *
                            std::exp(-2 * kPi * std::fabs(c0) * y1);
            double rel = std::fabs(lhs - rep.anchor_constant * stated) / std::fabs(lhs);
            rep.anchor_max_rel = std::max(rep.anchor_max_rel, rel);
        }
    rep.anchor_pass = rep.anchor_pass && rep.anchor_max_rel < rep.tolerance;
    rep.pass = rep.shifts_pass && rep.anchor_pass;
    return rep;
}

std::complex<double> sl2_whittaker(int n, double m, double x, double y, bool holomorphic) {
    if (n <= 1) throw std::invalid_argument("sl2_whittaker needs n > 1");
    if (!(y > 0)) throw std::domain_error("sl2_whittaker needs y > 0");
    if (m != 0 && ((holomorphic && m < 0) || (!holomorphic && m > 0))) return 0;
    double mag = std::pow(y, n / 2.0) * std::exp(-2 * kPi * std::fabs(m) * y);
    return std::polar(mag, 2 * kPi * m * x);
}

std::string to_string(ModuleKind k) {
    switch (k) {
        case ModuleKind::siegel: return "siegel";
        case ModuleKind::jacobi: return "jacobi";
        case ModuleKind::borel: return "borel";
    }
    return "?";
}

ModuleKind module_kind_from_string(const std::string& s) {
    for (auto k : {ModuleKind::siegel, ModuleKind::jacobi, ModuleKind::borel})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown module kind: " + s);
}

ModuleDescriptor sl2_module_descriptor(ModuleKind which, const HCParameter& p) {
    require_large(p, "sl2_module_descriptor");
    const BlattnerParameter b = blattner(p);
    const bool II = p.xi_type == XiType::II;
    ModuleDescriptor md;
    md.kind = which;
    switch (which) {
        case ModuleKind::siegel:
            // Lowest weight L1+L2 (type II) or -(L1+L2) (type III), together with d.
            md.weights = {std::abs(b.L1 + b.L2), b.d};
            md.citation = "Siegel-parabolic Whittaker module: subspace of D_{|L1+L2|} + D_{d}";
            break;
        case ModuleKind::jacobi: {
            char s = II ? '+' : '-';
            md.jacobi = {{-p.l2 + 2, p.l1 + 1, s}, {p.l1 + 2, -p.l2 + 1, s}};
            md.citation = "Jacobi-parabolic Whittaker module: |.|^{-l2+2} x D_{l1+1} + |.|^{l1+2} x D_{-l2+1}";
            break;
        }
        case ModuleKind::borel:
            if (II) md.borel_pairs = {{-b.L2 + 2, b.L1}, {b.L1 + 1, b.L2 + 1}, {b.L1 + 1, -b.L2 + 1}};
            else md.borel_pairs = {{b.L1 + 2, -b.L2}, {-b.L2 + 1, -b.L1 + 1}, {-b.L2 + 1, b.L1 + 1}};
            md.citation = "minimal-parabolic Whittaker module: sum of three characters of the split torus";
            break;
    }
    return md;
}

}  // namespace sp4
