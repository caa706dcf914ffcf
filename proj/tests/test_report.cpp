#include <doctest.h>

#include "sp4/report.hpp"

using namespace sp4;

TEST_CASE("report status and exit contract") {
    Report r{"demo", {}};
    r.check("a", true, "c");
    CHECK(r.ok());
    r.add({"b", Status::MISMATCH, 0.5, "c", true, nullptr});
    CHECK(r.ok());
    auto j = r.to_json();
    CHECK(j["summary"]["MISMATCH"] == 1);
    CHECK(j["expected_mismatches"].size() == 1);
    r.add({"c", Status::MISMATCH, {}, "c", false, nullptr});
    CHECK_FALSE(r.ok());
    Report f{"demo", {}};
    f.check("x", false, "c", 1e-3);
    CHECK_FALSE(f.ok());
    auto m = merge_reports("all", {r, f});
    CHECK(m.cases.size() == 4);
    CHECK(m.cases[0].name == "demo/a");
}

TEST_CASE("json dump is sorted and uses 17 significant digits") {
    nlohmann::json j = {{"b", 0.1}, {"a", 1}};
    auto s = dump_json(j, -1);
    CHECK(s.find("\"a\"") < s.find("\"b\""));
    CHECK(s.find("0.10000000000000001") != std::string::npos);
    CHECK(dump_json(j) == dump_json(j));
}

TEST_CASE("csv dump") {
    auto s = dump_csv({"a1", "a2", "i", "value"}, {{1, 2, 0, 0.5}});
    CHECK(s.rfind("a1,a2,i,value\n", 0) == 0);
    CHECK(s.find("0.5") != std::string::npos);
}
