#include "sp4/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sp4 {

std::string to_string(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::MISMATCH: return "MISMATCH";
    }
    return "?";
}

void Report::check(const std::string& name, bool ok, const std::string& citation, std::optional<double> residual,
                   nlohmann::json detail) {
    cases.push_back({name, ok ? Status::PASS : Status::FAIL, residual, citation, false, std::move(detail)});
}

bool Report::ok() const {
    for (const auto& c : cases)
        if (c.status == Status::FAIL || (c.status == Status::MISMATCH && !c.expected)) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json cs = nlohmann::json::array(), expected = nlohmann::json::array();
    int pass = 0, fail = 0, mismatch = 0;
    for (const auto& c : cases) {
        nlohmann::json j = {{"name", c.name}, {"status", to_string(c.status)}, {"citation", c.citation}};
        if (c.max_residual) j["max_residual"] = *c.max_residual;
        if (!c.detail.is_null()) j["detail"] = c.detail;
        if (c.status == Status::MISMATCH && c.expected) {
            expected.push_back(j);
            ++mismatch;
            continue;
        }
        cs.push_back(j);
        if (c.status == Status::PASS) ++pass;
        else if (c.status == Status::FAIL) ++fail;
        else ++mismatch;
    }
    return {{"suite", suite},
            {"cases", cs},
            {"expected_mismatches", expected},
            {"summary", {{"PASS", pass}, {"FAIL", fail}, {"MISMATCH", mismatch}, {"total", cases.size()}}},
            {"ok", ok()}};
}

Report merge_reports(const std::string& suite, const std::vector<Report>& parts) {
    Report r;
    r.suite = suite;
    for (const auto& p : parts)
        for (auto c : p.cases) {
            c.name = p.suite + "/" + c.name;
            r.cases.push_back(std::move(c));
        }
    return r;
}

namespace {

std::string number(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.dump();
    double v = j.get<double>();
    if (std::isnan(v) || std::isinf(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_rec(const nlohmann::json& j, int indent, int depth, std::ostringstream& os) {
    indent = std::max(indent, 0);  // negative means compact
    const std::string pad(indent * (depth + 1), ' '), end(indent * depth, ' ');
    const char* nl = indent > 0 ? "\n" : "";
    const char* sep = indent > 0 ? ": " : ":";
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{" << nl;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann::json objects iterate in key order
            if (!first) os << "," << nl;
            first = false;
            os << pad << nlohmann::json(it.key()).dump() << sep;
            dump_rec(it.value(), indent, depth + 1, os);
        }
        os << nl << end << "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << "[" << nl;
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << "," << nl;
            os << pad;
            dump_rec(j[i], indent, depth + 1, os);
        }
        os << nl << end << "]";
    } else if (j.is_number()) {
        os << number(j);
    } else {
        os << j.dump();
    }
}

std::string cell(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number()) return number(j);
    if (j.is_null()) return "";
    return dump_json(j, 0);
}

bool is_flat_row(const nlohmann::json& j) {
    if (!j.is_object()) return false;
    for (const auto& v : j) if (v.is_object()) return false;
    return true;
}

void table_rec(const nlohmann::json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_flat_row)) {
        std::vector<std::string> cols;
        for (const auto& row : j)
            for (auto it = row.begin(); it != row.end(); ++it)
                if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
        std::vector<std::size_t> width(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            width[c] = cols[c].size();
            for (const auto& row : j)
                if (row.contains(cols[c])) width[c] = std::max(width[c], cell(row[cols[c]]).size());
        }
        if (!prefix.empty()) os << prefix << ":\n";
        auto line = [&](auto get) {
            std::string s;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::string v = get(c);
                s += v + std::string(width[c] - v.size() + (c + 1 < cols.size() ? 2 : 0), ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            os << "  " << s << "\n";
        };
        line([&](std::size_t c) { return cols[c]; });
        for (const auto& row : j) line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : ""; });
        return;
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it.value().is_structured() && !(it.value().is_array() && it.value().empty())) table_rec(it.value(), key, os);
            else os << key << ": " << cell(it.value()) << "\n";
        }
        return;
    }
    os << (prefix.empty() ? "" : prefix + ": ") << cell(j) << "\n";
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
    std::ostringstream os;
    dump_rec(j, indent, 0, os);
    return os.str();
}

std::string dump_table(const nlohmann::json& j) {
    std::ostringstream os;
    table_rec(j, "", os);
    return os.str();
}

std::string dump_csv(const std::vector<std::string>& columns, const std::vector<std::vector<nlohmann::json>>& rows) {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << cell(r[c]);
        os << "\n";
    }
    return os.str();
}

}  // namespace sp4
