#include <doctest.h>

#include "sp4/params.hpp"

using namespace sp4;

TEST_CASE("classification examples") {
    CHECK(classify(2, -1).xi_type == XiType::II);
    CHECK(classify(1, -3).xi_type == XiType::III);
    CHECK(classify(2, 1).xi_type == XiType::I);
    CHECK(classify(-1, -2).xi_type == XiType::IV);
    CHECK_THROWS_AS(classify(2, 2), ParameterError);
    CHECK_THROWS_AS(classify(2, -2), ParameterError);
    CHECK_THROWS_AS(classify(0, -1), ParameterError);
    CHECK_THROWS_AS(classify(1, 3), ParameterError);
}

TEST_CASE("Blattner shift") {
    auto b = blattner(classify(2, -1));
    CHECK(b.L1 == 3);
    CHECK(b.L2 == -1);
    CHECK(b.d == 4);
    b = blattner(classify(1, -3));
    CHECK((b.L1 == 1 && b.L2 == -4 && b.d == 5));
    b = blattner(classify(2, 1));
    CHECK((b.L1 == 3 && b.L2 == 3 && b.d == 0));
    b = blattner(classify(-1, -2));
    CHECK((b.L1 == -3 && b.L2 == -3));
}

TEST_CASE("property: contragredient exchanges II and III and keeps d") {
    for (const auto& p : large_parameters(12)) {
        auto q = contragredient(p);
        CHECK(q.xi_type == (p.xi_type == XiType::II ? XiType::III : XiType::II));
        CHECK(blattner(q).d == blattner(p).d);
        auto r = contragredient(q);
        CHECK((r.l1 == p.l1 && r.l2 == p.l2));
    }
}

TEST_CASE("large parameter enumeration") {
    auto ps = large_parameters(5, 4);
    // d = 4: (2,-1) and (1,-2); d = 5: (3,-1), (1,-3)
    REQUIRE(ps.size() == 4);
    CHECK((ps[0].l1 == 2 && ps[0].l2 == -1));
    CHECK((ps[1].l1 == 1 && ps[1].l2 == -2));
    for (const auto& p : large_parameters(10)) CHECK(p.large());
    CHECK_THROWS_AS(require_large(classify(2, 1), "siegel"), UnsupportedType);
    CHECK_THROWS_AS((DegenerateCharacter{1, 1}.validate()), UnsupportedType);
}
