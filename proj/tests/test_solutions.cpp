#include <doctest.h>

#include <cmath>
#include <random>

#include "sp4/solutions.hpp"

using namespace sp4;

namespace {

std::vector<double> y1_grid() { return {0.2, 0.5, 1, 2, 5}; }

bool entry_empty(const NumericFamily& f, int i) { return f.entries[i].terms.empty(); }

}  // namespace

TEST_CASE("Siegel solution tables") {
    auto p = classify(2, -1);
    auto f = siegel_solution(p, 1, 1, 0);
    REQUIRE(f.entries.size() == 5);
    CHECK(f.basis == FamilyBasis::Ustar);
    for (int i = 0; i < 3; ++i) CHECK(entry_empty(f, i));
    CHECK_FALSE(entry_empty(f, 3));
    CHECK_FALSE(entry_empty(f, 4));
    double phi3 = f.entries[3].eval(1, 1).real();
    CHECK(phi3 == doctest::Approx(4 * M_PI * std::exp(-2 * M_PI)).epsilon(1e-10));
    CHECK(phi3 == doctest::Approx(0.0234667).epsilon(1e-5));

    auto g = siegel_solution(p, 1, 0, 1);
    for (int i = 0; i < 4; ++i) CHECK(entry_empty(g, i));
    CHECK_FALSE(entry_empty(g, 4));

    auto h = siegel_solution(p, -1, 1, 0);
    CHECK_FALSE(entry_empty(h, 0));
    CHECK_FALSE(entry_empty(h, 1));
    for (int i = 2; i <= 4; ++i) CHECK(entry_empty(h, i));
    auto h1 = siegel_solution(p, -1, 0, 1);
    CHECK_FALSE(entry_empty(h1, 0));
    for (int i = 1; i <= 4; ++i) CHECK(entry_empty(h1, i));

    CHECK_THROWS_AS(siegel_solution(classify(2, 1), 1), UnsupportedType);
    CHECK_THROWS_AS(siegel_solution(p, 0), UnsupportedType);
}

TEST_CASE("Siegel families solve the radial system") {
    for (auto lam : {std::pair{2, -1}, {3, -1}, {3, -2}, {4, -1}}) {
        for (auto p : {classify(lam.first, lam.second), contragredient(classify(lam.first, lam.second))})
            for (double c0 : {1.0, -1.0, 0.5}) {
                CAPTURE(p.l1);
                CAPTURE(p.l2);
                CAPTURE(c0);
                auto fam = siegel_solution(p, c0, 1, 1);
                auto r = radial_system_residual(fam, p, {c0, 0}, default_radial_grid());
                CHECK(r.pass);
                CHECK(r.max_rel < 1e-6);
                auto rv = radial_system_residual(to_vstar(fam), p, {c0, 0}, default_radial_grid());
                CHECK(rv.system == "vstar");
                CHECK(rv.pass);
            }
    }
}

TEST_CASE("negative control: Siegel family checked with the wrong c0 fails") {
    auto p = classify(2, -1);
    auto r = radial_system_residual(siegel_solution(p, 1), p, {2, 0}, default_radial_grid());
    CHECK_FALSE(r.pass);
}

TEST_CASE("Borel stated families") {
    auto p = classify(2, -1);
    auto f1 = borel_solution(p, BorelFamily::f1);
    CHECK(f1.basis == FamilyBasis::Vstar);
    REQUIRE(f1.entries.size() == 5);
    for (int i = 0; i <= 4; ++i) {
        auto t = f1.entries[i].merged().terms;
        if (i % 2) {
            CHECK(t.empty());
            continue;
        }
        REQUIRE(t.size() == 1);
        // a1^4 a2^0 = y1^2 y2^2
        CHECK(t[0].p == 2);
        CHECK(t[0].q == 2);
        CHECK(t[0].coeff == GaussianRational(i % 4 == 0 ? 1 : -1));
    }
    auto f0 = borel_solution(p, BorelFamily::f0);
    REQUIRE(f0.entries[0].terms.size() == 1);
    CHECK(f0.entries[0].terms[0].p == 0);  // a1^3 a2^3
    CHECK(f0.entries[0].terms[0].q == 3);
    for (int i = 1; i <= 4; ++i) CHECK(f0.entries[i].terms.empty());

    auto g0 = borel_solution(classify(1, -3), BorelFamily::f0);
    REQUIRE(g0.entries.size() == 6);
    REQUIRE(g0.entries[5].terms.size() == 1);
    CHECK(g0.entries[5].terms[0].p == rational(-1, 2));  // a1^3 a2^4
    CHECK(g0.entries[5].terms[0].q == rational(7, 2));
    for (int i = 0; i < 5; ++i) CHECK(g0.entries[i].terms.empty());
}

TEST_CASE("Borel residuals are exact") {
    auto p = classify(2, -1);
    auto r = radial_system_residual(borel_solution(p, BorelFamily::f1), p, {0, 0}, default_radial_grid());
    CHECK(r.exact_path);
    CHECK(r.exact_zero);
    CHECK(r.pass);
    auto scaled = borel_solution(p, BorelFamily::f1);
    for (auto& e : scaled.entries) e = e.scaled(GaussianRational(rational(-7, 3)));
    CHECK(radial_system_residual(scaled, p, {0, 0}, default_radial_grid()).exact_zero);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-3, 3), ex(-3, 4);
    ExactFamily rnd;
    rnd.basis = FamilyBasis::Vstar;
    for (int i = 0; i <= 4; ++i) rnd.entries.push_back(ExactRadial::a_monomial(GaussianRational(c(rng) == 0 ? 1 : 2), ex(rng), ex(rng)));
    auto rr = radial_system_residual(rnd, p, {0, 0}, default_radial_grid());
    CHECK_FALSE(rr.exact_zero);
    CHECK_FALSE(rr.pass);
}

TEST_CASE("Borel recurrence kernel and comparison") {
    for (const auto& p : large_parameters(9, 2)) {
        CAPTURE(p.l1);
        CAPTURE(p.l2);
        auto ker = borel_recurrence_solve(p);
        CHECK(ker.size() == 5);
        for (const auto& f : ker) CHECK(radial_system_residual(f, p, {0, 0}, default_radial_grid()).exact_zero);
        auto cmp = compare_borel_formulas(p);
        REQUIRE(cmp.size() == 5);
        for (int k = 0; k < 3; ++k) CHECK(cmp[k].match);
        for (const auto& c : cmp) {
            auto r = radial_system_residual(borel_solution(p, c.which), p, {0, 0}, default_radial_grid());
            CHECK(r.exact_zero == c.match);
        }
    }
    auto cmp = compare_borel_formulas(classify(2, -1));
    const auto& f3 = cmp[3];
    CHECK_FALSE(f3.match);
    CHECK(f3.offending_index == 2);
    CHECK(f3.stated[2] == GaussianRational(-2));
    CHECK(f3.kernel_derived[0] == GaussianRational(1));
    CHECK(f3.kernel_derived[2] == GaussianRational(rational(-1, 3)));
    CHECK(f3.kernel_derived[4] == GaussianRational(rational(-1, 3)));
}

TEST_CASE("raising and lowering identities") {
    auto r = raising_lowering_check(classify(2, -1), 1, y1_grid());
    CHECK(r.pass);
    CHECK(r.anchor_index == 3);
    CHECK(r.anchor_exponent == 1);
    auto s = raising_lowering_check(classify(1, -3), 1, y1_grid());
    CHECK(s.pass);
    // Lambda = (1,-4): anchor at i = -Lambda2 with y1 exponent -(Lambda1+Lambda2)/2.
    CHECK(s.anchor_index == 4);
    CHECK(s.anchor_exponent == rational(3, 2));
    auto n = raising_lowering_check(classify(2, -1), -1, y1_grid());
    CHECK(n.shifts_pass);
    CHECK(n.anchor_pass);
    CHECK(n.printed_coefficient_checked);
    CHECK_FALSE(n.printed_coefficient_matches);
    CHECK_FALSE(raising_lowering_check(classify(2, -1), 1, y1_grid(), 0.5).shifts_pass);
}

TEST_CASE("holomorphic sl2 Whittaker functions") {
    auto v = sl2_whittaker(3, 1, 0, 2, true);
    CHECK(v.real() == doctest::Approx(std::pow(2.0, 1.5) * std::exp(-4 * M_PI)).epsilon(1e-13));
    CHECK(v.imag() == doctest::Approx(0).epsilon(1e-20));
    CHECK(sl2_whittaker(3, -1, 0, 2, true) == std::complex<double>(0));
    CHECK(sl2_whittaker(3, 1, 0.3, 2, false) == std::complex<double>(0));
    CHECK(std::abs(sl2_whittaker(4, 0, 0.3, 2, true) - std::complex<double>(4)) < 1e-14);
    CHECK_THROWS_AS(sl2_whittaker(1, 1, 0, 1, true), std::invalid_argument);
    // Cauchy-Riemann radial condition and decay.
    for (int n : {2, 3, 6})
        for (double m : {0.5, 1.0})
            for (double y : {0.3, 1.0, 3.0}) {
                auto f = [&](double s) { return std::abs(sl2_whittaker(n, m, 0, s, true)); };
                double dv = richardson_derivative(f, y, 0.01 * y);
                double val = f(y);
                CHECK(std::abs(y * dv - (n / 2.0 - 2 * M_PI * m * y) * val) < 1e-10 * (val + y * std::abs(dv)) + 1e-300);
            }
    CHECK(std::abs(sl2_whittaker(3, 1, 0, 40, true)) < 1e-100);
}

TEST_CASE("module descriptors") {
    auto p = classify(2, -1);
    auto s = sl2_module_descriptor(ModuleKind::siegel, p);
    CHECK(s.weights == std::vector<int>{2, 4});
    auto j = sl2_module_descriptor(ModuleKind::jacobi, p);
    REQUIRE(j.jacobi.size() == 2);
    CHECK((j.jacobi[0].exponent == 3 && j.jacobi[0].weight == 3 && j.jacobi[0].sign == '+'));
    CHECK((j.jacobi[1].exponent == 4 && j.jacobi[1].weight == 2 && j.jacobi[1].sign == '+'));
    auto b = sl2_module_descriptor(ModuleKind::borel, p);
    CHECK(b.borel_pairs == std::vector<std::pair<int, int>>{{3, 3}, {4, 0}, {4, 2}});
    CHECK(module_kind_from_string("jacobi") == ModuleKind::jacobi);
    CHECK_THROWS(module_kind_from_string("x"));
}

TEST_CASE("property: analytic dy1 matches finite differences on random families") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_int_distribution<int> pw(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        NumericRadial f;
        for (int k = 0; k < 3; ++k) {
            WFactor w{std::round(4 * u(rng)) / 2, std::round(4 * u(rng)) / 2, 1 + std::fabs(u(rng))};
            f += NumericRadial::whittaker(u(rng), rational(pw(rng), 2), rational(pw(rng), 2), w, 0.3 * u(rng));
            f += NumericRadial::monomial(u(rng), rational(pw(rng), 2), rational(pw(rng), 2), 0.2 * u(rng));
        }
        auto g = f.dy1();
        for (double y1 : {0.4, 1.3, 3.0})
            for (double y2 : {0.5, 2.0}) {
                auto F = [&](double s) { return f.eval(s, y2).real(); };
                double fd = y1 * richardson_derivative(F, y1, 0.05 * y1);
                double an = g.eval(y1, y2).real();
                CHECK(std::abs(fd - an) <= 1e-6 * (g.magnitude(y1, y2) + f.magnitude(y1, y2)));
                auto G2 = [&](double s) { return f.eval(y1, s).real(); };
                double fd2 = y2 * richardson_derivative(G2, y2, 0.05 * y2);
                CHECK(std::abs(fd2 - f.dy2().eval(y1, y2).real()) <= 1e-6 * f.magnitude(y1, y2));
            }
    }
}
