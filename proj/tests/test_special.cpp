#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracle.hpp"
#include "sp4/special.hpp"

using namespace sp4;

TEST_CASE("closed-form examples") {
    CHECK(whittaker_w({1, 0.5}, 2) == doctest::Approx(2 * std::exp(-1.0)).epsilon(1e-13));
    double y = 4 * M_PI;
    CHECK(whittaker_w({1.5, 1}, y) == doctest::Approx(std::pow(y, 1.5) * std::exp(-2 * M_PI)).epsilon(1e-12));
    CHECK(whittaker_w({0, 0.5}, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(whittaker_w({0, 0.5}, 0), std::domain_error);
    CHECK_THROWS_AS(whittaker_w({0, 0.5}, -1), std::domain_error);
}

TEST_CASE("integral oracle agreement where the representation is valid") {
    std::vector<double> ys{0.25, 0.5, 1, 2, 4, 8, 16};
    int checked = 0;
    for (double kappa = -3; kappa <= 3; kappa += 0.5)
        for (double mu = -3; mu <= 3; mu += 0.5) {
            if (mu - kappa + 0.5 <= 0) continue;
            for (double y : ys) {
                double o = oracle::whittaker(kappa, mu, y);
                double w = whittaker_w_raw({kappa, mu}, y);
                CAPTURE(kappa);
                CAPTURE(mu);
                CAPTURE(y);
                CHECK(std::abs(w - o) <= 1e-8 * std::abs(o));
                ++checked;
            }
        }
    CHECK(checked > 300);
}

TEST_CASE("derivative: closed form and finite differences") {
    CHECK(std::abs(whittaker_w_dy({1, 0.5}, 2)) < 1e-14);
    for (double kappa : {-1.5, 0.0, 1.0, 2.5})
        for (double mu : {0.0, 0.5, 1.5})
            for (double y : {0.5, 2.0, 9.0}) {
                double h = 1e-4 * y;
                double fd = (whittaker_w({kappa, mu}, y + h) - whittaker_w({kappa, mu}, y - h)) / (2 * h);
                double an = whittaker_w_dy({kappa, mu}, y);
                CHECK(std::abs(fd - an) <= 1e-6 * std::max(std::abs(an), std::abs(whittaker_w({kappa, mu}, y)) / y));
            }
    // (y d/dy + y/2 - kappa) annihilates the closed form when kappa = mu + 1/2.
    for (double y : {0.5, 3.0, 12.0}) {
        double mu = 1.5, kappa = 2;
        double lhs = y * whittaker_w_dy({kappa, mu}, y) + (y / 2 - kappa) * whittaker_w({kappa, mu}, y);
        CHECK(std::abs(lhs) < 1e-10 * whittaker_w({kappa, mu}, y));
    }
}

TEST_CASE("contiguous relations") {
    auto rep = check_contiguous({0.5, 1}, {0.5, 1, 2, 8});
    CHECK(rep.pass);
    CHECK(whittaker_w_raw({1, 0.5}, 3) == doctest::Approx(whittaker_w_raw({1, -0.5}, 3)).epsilon(1e-10));
    WhittakerEvaluator bad = [](double k, double m, double y) {
        double v = whittaker_w({k, m}, y);
        return (m < 0) ? v * (1 + 1e-4) : v;
    };
    CHECK_FALSE(check_contiguous({0.5, 1}, {0.5, 1, 2, 8}, bad).pass);
}

TEST_CASE("property: (f3) closed form and decay") {
    for (double mu : {0.5, 1.0, 1.5, 2.0})
        for (double y = 0.25; y <= 16; y *= 2) {
            double c = std::pow(y, mu + 0.5) * std::exp(-y / 2);
            CHECK(std::abs(whittaker_w({mu + 0.5, mu}, y) - c) < 1e-12 * c);
        }
    for (double kappa : {-2.0, 0.5, 3.0}) {
        double prev = std::log(whittaker_w({kappa, 1}, 10));
        for (double y = 12; y <= 50; y += 2) {
            double cur = std::log(whittaker_w({kappa, 1}, y));
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("richardson derivative") {
    double err = 0;
    double d = richardson_derivative([](double x) { return std::sin(x); }, 1.0, 0.1, &err);
    CHECK(std::abs(d - std::cos(1.0)) < 1e-10);
    CHECK(err < 1e-8);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(-1, 0) == 1);
    CHECK(pochhammer(-1, 1) == -1);
    CHECK(pochhammer(-1, 2) == 0);
    CHECK(pochhammer(rational(1, 2), 3) == rational(15, 8));
    CHECK_THROWS_AS(pochhammer(1, -1), std::invalid_argument);
}
