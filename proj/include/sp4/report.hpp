#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sp4 {

enum class Status { PASS, FAIL, MISMATCH };
std::string to_string(Status s);

struct Case {
    std::string name;
    Status status = Status::PASS;
    std::optional<double> max_residual;
    std::string citation;
    bool expected = false;  // MISMATCH that is a documented discrepancy; does not fail the run
    nlohmann::json detail;
};

struct Report {
    std::string suite;
    std::vector<Case> cases;

    void add(Case c) { cases.push_back(std::move(c)); }
    void check(const std::string& name, bool ok, const std::string& citation, std::optional<double> residual = {},
               nlohmann::json detail = nullptr);
    // Failing only if some case is FAIL or an unexpected MISMATCH.
    bool ok() const;
    nlohmann::json to_json() const;
};

Report merge_reports(const std::string& suite, const std::vector<Report>& parts);

// Sorted keys, floats with 17 significant digits, no trailing whitespace.
std::string dump_json(const nlohmann::json& j, int indent = 2);
std::string dump_table(const nlohmann::json& j);
std::string dump_csv(const std::vector<std::string>& columns, const std::vector<std::vector<nlohmann::json>>& rows);

struct SuiteOptions {
    int max_degree = 8;
    unsigned seed = 1;
    int threads = 1;
};

std::vector<std::string> suite_names();  // lie, beta, whittaker, siegel, borel, fj, rules
Report run_suite(const std::string& name, const SuiteOptions& opt);  // also accepts "all"

}  // namespace sp4
