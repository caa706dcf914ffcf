#include <doctest.h>

#include <random>

#include "sp4/exact.hpp"

using namespace sp4;

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(rational(1, 2), 3), b(-2, rational(1, 3));
    CHECK(a + b == GaussianRational(rational(-3, 2), rational(10, 3)));
    CHECK(a * b == GaussianRational(-2, rational(-35, 6)));  // (1/2)(-2) - 3(1/3), (1/2)(1/3) + 3(-2)
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == GaussianRational(rational(1, 2), -3));
    CHECK(a.norm() == rational(37, 4));
    CHECK(GaussianRational(rational(4, 8), 0) == GaussianRational(rational(1, 2)));
}

TEST_CASE("rational helper canonicalizes") {
    CHECK(rational(6, 4).get_str() == "3/2");
    CHECK(rational(-4, 2) == 2 * Rational(-1));
    CHECK(rational(3, -6).get_str() == "-1/2");
}

TEST_CASE("matrix inverse, rank and kernel") {
    ExactMatrix m{{1, 2}, {3, 4}};
    CHECK(m * m.inverse() == ExactMatrix::identity(2));
    CHECK(m.inverse() == ExactMatrix{{-2, 1}, {GaussianRational(rational(3, 2)), GaussianRational(rational(-1, 2))}});
    ExactMatrix s{{1, 2, 3}, {2, 4, 6}};
    CHECK(s.rank() == 1);
    auto k = kernel_basis(s);
    REQUIRE(k.size() == 2);
    for (const auto& v : k)
        for (const auto& z : s.apply(v)) CHECK(z.is_zero());
    CHECK_THROWS_AS(s.transpose().inverse(), std::domain_error);
    CHECK_THROWS_AS(ExactMatrix({{1, 2}, {2, 4}}).inverse(), std::domain_error);
}

TEST_CASE("kernel of a complex system") {
    const GaussianRational I = GaussianRational::i();
    ExactMatrix m{{1, I, 0}, {0, 1, -I}};
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][2] == GaussianRational(1));
    CHECK(k[0][1] == I);
    CHECK(k[0][0] == GaussianRational(1));  // 1 + i*i = 0
}

TEST_CASE("property: rank + nullity = columns on random integer matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-2, 2), dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = GaussianRational(e(rng), e(rng));
        auto k = kernel_basis(m);
        CHECK(m.rank() + k.size() == c);
        for (const auto& v : k)
            for (const auto& z : m.apply(v)) CHECK(z.is_zero());
    }
}

TEST_CASE("bivariate polynomial product") {
    auto x1 = BivariatePolynomial::monomial(1, 0), x2 = BivariatePolynomial::monomial(0, 1);
    auto p = x1 + BivariatePolynomial::monomial(0, 1, GaussianRational::i());
    auto q = x1 + BivariatePolynomial::monomial(0, 1, -GaussianRational::i());
    auto pq = poly_mul(p, q);
    CHECK(pq == poly_mul(x1, x1) + poly_mul(x2, x2));
    CHECK(pq.is_homogeneous());
    CHECK(pq.degree() == 2);
    CHECK(pq.coeff(1, 1).is_zero());
    CHECK(BivariatePolynomial().degree() == -1);
}
