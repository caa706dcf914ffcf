#include <doctest.h>

#include <algorithm>

#include "sp4/embedding.hpp"
#include "sp4/fj.hpp"

using namespace sp4;

namespace {

RealCharacter ch(int parity, int exponent) { return {Rational(exponent), parity}; }

}  // namespace

TEST_CASE("characters") {
    CHECK(parse_character("sgn|1") == ch(1, 1));
    CHECK(parse_character("1|-3/2") == RealCharacter{rational(-3, 2), 0});
    CHECK(ch(1, 2) * ch(1, -1) == ch(0, 1));
    CHECK_THROWS(parse_character("foo"));
}

TEST_CASE("Siegel embedding targets") {
    auto t = emb_siegel_targets(classify(2, -1));
    REQUIRE(t.size() == 2);
    CHECK((t[0].exponent == rational(3, 2) && t[0].weight == 2));
    CHECK((t[1].exponent == rational(1, 2) && t[1].weight == 4));
    auto u = emb_siegel_targets(classify(1, -3));
    CHECK((u[0].exponent == 2 && u[0].weight == 3));
    CHECK((u[1].exponent == 1 && u[1].weight == 5));
    CHECK_THROWS_AS(emb_siegel_targets(classify(2, 1)), UnsupportedType);
}

TEST_CASE("Jacobi embeddings") {
    auto p = classify(2, -1);
    CHECK(emb_jacobi(p, ch(1, 1), 1));
    CHECK_FALSE(emb_jacobi(p, ch(0, 1), 1));
    CHECK(emb_jacobi(p, ch(0, 2), 2));
    CHECK_FALSE(emb_jacobi(p, ch(1, 2), 2));
    CHECK_THROWS_AS(emb_jacobi(p, ch(0, 3), 1), std::invalid_argument);
    CHECK_THROWS_AS(emb_jacobi(p, ch(0, 1), 3), std::invalid_argument);
}

TEST_CASE("principal series embeddings") {
    auto p = classify(2, -1);
    CHECK(emb_principal(p, ch(1, 1), ch(1, 2), 1));
    CHECK_FALSE(emb_principal(p, ch(0, 1), ch(1, 2), 1));
    // l1 + l2 + 1 = 2: product parity must be even.
    CHECK(emb_principal(p, ch(0, 2), ch(0, 1), 3));
    CHECK(emb_principal(p, ch(1, 2), ch(1, 1), 3));
    CHECK_FALSE(emb_principal(p, ch(1, 2), ch(0, 1), 3));
    CHECK(emb_principal(p, ch(1, 2), ch(1, -1), 2));
    for (int a : {0, 1})
        for (int b : {0, 1}) {
            CHECK_FALSE(emb_principal(p, ch(a, -2), ch(b, -1), 4));
            CHECK_FALSE(emb_principal(p, ch(a, -2), ch(b, -1), 5));
        }
    CHECK_THROWS_AS(emb_principal(p, ch(0, 1), ch(0, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(principal_pattern_exponents(p, 6), std::invalid_argument);
    auto q = classify(1, -3);
    CHECK(principal_pattern_exponents(q, 1) == std::pair{1, 3});
}

TEST_CASE("allowed cuspidal components") {
    auto p = classify(2, -1);
    CHECK(cuspidal_weights(Parabolic::P_S, p) == std::vector<int>{2, 4});
    auto j = allowed_cuspidal_components(Parabolic::P_J, p);
    REQUIRE(j.verdict.size() == 2);
    CHECK(j.verdict[0]["weight"] == 3);
    CHECK(j.verdict[0]["mu_parity"] == 1);
    CHECK(j.verdict[0]["exponent"] == "1");
    CHECK(j.verdict[1]["weight"] == 2);
    CHECK(j.verdict[1]["mu_parity"] == 0);
    CHECK(j.verdict[1]["exponent"] == "2");
    CHECK_FALSE(j.flags.empty());
    auto b = allowed_cuspidal_components(Parabolic::P_0, classify(1, -3));
    REQUIRE(b.verdict.size() == 1);
    CHECK(b.verdict[0]["mu1_parity"] == 0);
    CHECK(b.verdict[0]["mu2_parity"] == 1);
    CHECK(b.verdict[0]["exponents"] == nlohmann::json::array({"3", "1"}));
    CHECK_FALSE(allowed_cuspidal_components(Parabolic::P_0, p).flags.empty());
}

TEST_CASE("convergence conditions") {
    CHECK_FALSE(convergence_condition(Parabolic::P_S, classify(2, -1), 2));
    CHECK(convergence_condition(Parabolic::P_S, classify(5, -1), 2));
    CHECK_FALSE(convergence_condition(Parabolic::P_J, classify(2, -1), 3));
    CHECK(convergence_condition(Parabolic::P_J, classify(3, -1), 3));
    CHECK(convergence_condition(Parabolic::P_J, classify(4, -3), 2));
    // Printed type II hypothesis l2 > 1 never holds.
    for (const auto& p : large_parameters(12))
        if (p.xi_type == XiType::II) CHECK_FALSE(convergence_condition(Parabolic::P_0, p, 1));
    CHECK(convergence_condition(Parabolic::P_0, classify(2, -4), 1));
    CHECK_THROWS_AS(convergence_condition(Parabolic::P_S, classify(2, -1), 1), std::invalid_argument);
    auto r = convergence_record(Parabolic::P_0, classify(4, -2), 1);
    CHECK(r.verdict == false);
    CHECK(r.flags.size() >= 2);
}

TEST_CASE("Levi weight constraints") {
    auto s = gl2_weight_constraint(4, LeviGroup::SL2);
    CHECK(s.parity == 0);
    CHECK(s.exponents == std::vector<Rational>{3});
    auto g = gl2_weight_constraint(5, LeviGroup::GL2);
    CHECK(g.parity == 1);
    CHECK(g.exponents == std::vector<Rational>{2, -2});
    CHECK_THROWS_AS(gl2_weight_constraint(2, LeviGroup::SL2), std::invalid_argument);
}

TEST_CASE("property: cross-module consistency and determinism") {
    for (const auto& p : large_parameters(9)) {
        std::vector<int> fj;
        for (char s : {'+', '-'})
            for (int w = 2; w <= 40; ++w)
                if (fj_nonvanishing(p, {s, w})) fj.push_back(w);
        std::sort(fj.begin(), fj.end());
        CHECK(cuspidal_weights(Parabolic::P_J, p) == fj);

        auto q = contragredient(p);
        CHECK(cuspidal_weights(Parabolic::P_S, p) == cuspidal_weights(Parabolic::P_S, q));
        for (auto P : {Parabolic::P_S, Parabolic::P_J, Parabolic::P_0})
            CHECK(allowed_cuspidal_components(P, p).to_json() == allowed_cuspidal_components(P, p).to_json());
    }
    CHECK(parabolic_from_string("siegel") == Parabolic::P_S);
    CHECK(parabolic_from_string("P_0") == Parabolic::P_0);
    CHECK_THROWS(parabolic_from_string("P_X"));
}
