#include <doctest.h>

#include <cmath>

#include "sp4/fj.hpp"

using namespace sp4;

namespace {

// (-1)^i x(x+1)...(x+i-1)/i! by a direct product.
Rational product_oracle(int x, int i) {
    Rational num = 1, den = 1;
    for (int k = 0; k < i; ++k) {
        num *= x + k;
        den *= k + 1;
    }
    Rational r = num / den;
    return (i % 2) ? Rational(-r) : r;
}

}  // namespace

TEST_CASE("non-vanishing examples") {
    CHECK(fj_nonvanishing(classify(2, -1), {'+', 3}));
    CHECK_FALSE(fj_nonvanishing(classify(2, -1), {'-', 3}));
    CHECK(fj_nonvanishing(classify(1, -3), {'-', 4}));
    CHECK(fj_nonvanishing(classify(2, -1), {'+', 2}));
    CHECK_FALSE(fj_nonvanishing(classify(2, -1), {'+', 4}));
    CHECK_THROWS_AS(fj_function(classify(2, -1), {'-', 3}), std::invalid_argument);
}

TEST_CASE("label parsing") {
    auto l = parse_sl2_label("+3");
    CHECK((l.sign == '+' && l.weight == 3));
    CHECK(to_string(parse_sl2_label("-4")) == "-4");
    CHECK_THROWS(parse_sl2_label("3"));
    CHECK_THROWS(parse_sl2_label("+1"));
}

TEST_CASE("explicit functions") {
    auto f = fj_function(classify(2, -1), {'+', 3});
    CHECK(f.power == 3);
    REQUIRE(f.terms.size() == 1);
    CHECK((f.terms[0].coeff == 1 && f.terms[0].sl2_weight == 3 && f.terms[0].ktype_index == 4));

    auto g = fj_function(classify(3, -1), {'+', 2});
    CHECK(g.power == 5);
    REQUIRE(g.terms.size() == 2);
    CHECK((g.terms[0].coeff == 1 && g.terms[0].sl2_weight == 2 && g.terms[0].ktype_index == 3));
    CHECK((g.terms[1].coeff == -2 && g.terms[1].sl2_weight == 4 && g.terms[1].ktype_index == 5));
    auto vals = fj_evaluate(g, 1);
    CHECK(vals[0].value == 1);
    CHECK(vals[1].value == -2);

    auto h = fj_function(classify(1, -3), {'-', 4});
    CHECK(h.power == 3);
    REQUIRE(h.terms.size() == 1);
    CHECK((h.terms[0].sl2_weight == -4 && h.terms[0].ktype_index == 0));
}

TEST_CASE("evaluation") {
    auto f = fj_function(classify(2, -1), {'+', 3});
    CHECK(fj_evaluate(f, 2)[0].value == doctest::Approx(8));
    auto g = fj_function(classify(5, -2), {'+', 3});
    auto a = fj_evaluate(g, 0.7), b = fj_evaluate(g, 1.4);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(b[k].value / a[k].value == doctest::Approx(std::pow(2.0, g.power)));
    CHECK_THROWS_AS(fj_evaluate(g, 0), std::domain_error);
}

TEST_CASE("property: coefficients, index bound and parity for both types") {
    for (int m = 1; m <= 12; ++m)
        for (int s = 1; s <= 12; ++s) {
            auto p = classify(m + s, -m);  // l1 + l2 = s
            for (auto q : {p, contragredient(p)}) {
                const bool II = q.xi_type == XiType::II;
                const int d = blattner(q).d;
                for (char sign : {'+', '-'})
                    for (int w = 2; w <= 30; ++w) {
                        bool expect = II ? (sign == '+' && (w == q.l1 + 1 || w == -q.l2 + 1))
                                         : (sign == '-' && (w == q.l1 + 1 || w == -q.l2 + 1));
                        CHECK(fj_nonvanishing(q, {sign, w}) == expect);
                    }
                SL2Label sum_label{II ? '+' : '-', II ? -q.l2 + 1 : q.l1 + 1};
                auto f = fj_function(q, sum_label);
                const int x = II ? -q.l2 + 1 : q.l1 + 1;
                const int top = II ? (q.l1 + q.l2) / 2 : -(q.l1 + q.l2) / 2;
                REQUIRE(static_cast<int>(f.terms.size()) == top + 1);
                for (int i = 0; i <= top; ++i) {
                    CHECK(f.terms[i].coeff == product_oracle(x, i));
                    if (i > 0) CHECK(f.terms[i].coeff / f.terms[i - 1].coeff == Rational(-(x + i - 1)) / Rational(i));
                    CHECK(f.terms[i].ktype_index >= 0);
                    CHECK(f.terms[i].ktype_index <= d);
                    CHECK(std::abs(f.terms[i].sl2_weight - f.terms[0].sl2_weight) % 2 == 0);
                }
            }
        }
}
