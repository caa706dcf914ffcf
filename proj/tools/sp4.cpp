// Command-line front end: classify, blattner, eval, solve, verify, table.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "sp4/embedding.hpp"
#include "sp4/fj.hpp"
#include "sp4/report.hpp"
#include "sp4/solutions.hpp"

using nlohmann::json;
using namespace sp4;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lambda;
    double c0 = 1;
    std::string grid;
    std::string format = "json";
    unsigned seed = 1;
    int threads = 1;
    int max_degree = 8;
    std::string which = "f0";
    std::string label;
    std::string a_values = "0.5,1,2";
    std::string parabolic = "siegel";
    double C0 = 1, C1 = 0;
    std::string target;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

HCParameter parse_lambda(const Options& o) {
    if (o.lambda.empty()) throw UsageError("--lambda L1,L2 is required");
    auto parts = split(o.lambda, ',');
    if (parts.size() != 2) throw UsageError("--lambda expects L1,L2");
    return classify(to_int(parts[0]), to_int(parts[1]));
}

std::vector<GridPoint> parse_grid(const Options& o) {
    if (o.grid.empty()) return default_radial_grid();
    std::vector<GridPoint> g;
    for (const auto& item : split(o.grid, ',')) {
        auto ab = split(item, ':');
        if (ab.size() != 2) throw UsageError("--grid expects a1:a2,...");
        double a1 = to_double(ab[0]), a2 = to_double(ab[1]);
        if (!(a1 > 0 && a2 > 0)) throw std::domain_error("grid points need a1, a2 > 0");
        g.push_back({a1, a2});
    }
    return g;
}

json lambda_json(const HCParameter& p) { return {p.l1, p.l2}; }

void emit(const Options& o, const json& j, const std::vector<std::string>& cols = {},
          const std::vector<std::vector<json>>& rows = {}) {
    if (o.format == "json") std::cout << dump_json(j) << "\n";
    else if (o.format == "table") std::cout << dump_table(j);
    else if (cols.empty()) throw UsageError("--format csv is not available for this command");
    else std::cout << dump_csv(cols, rows);
}

json family_json(const ExactFamily& f) {
    json entries = json::array();
    for (std::size_t i = 0; i < f.entries.size(); ++i)
        for (const auto& t : f.entries[i].merged().terms)
            entries.push_back({{"i", i},
                               {"coeff", t.coeff.str()},
                               {"a1_exponent", Rational(t.p + t.q).get_str()},
                               {"a2_exponent", Rational(t.q - t.p).get_str()}});
    return {{"label", f.label}, {"basis", to_string(f.basis)}, {"terms", entries}};
}

int cmd_classify(const Options& o, bool blattner_only) {
    auto p = parse_lambda(o);
    auto b = blattner(p);
    json j = blattner_only ? json{{"L1", b.L1}, {"L2", b.L2}, {"d", b.d}}
                           : json{{"xi_type", to_string(p.xi_type)}, {"blattner", {b.L1, b.L2}}, {"d", b.d}};
    emit(o, j, {"xi_type", "L1", "L2", "d"}, {{to_string(p.xi_type), b.L1, b.L2, b.d}});
    return 0;
}

int cmd_eval(const Options& o) {
    if (o.target == "fj") {
        auto p = parse_lambda(o);
        if (o.label.empty()) throw UsageError("eval fj needs --label +N or -N");
        auto f = fj_function(p, parse_sl2_label(o.label));
        json terms = json::array(), values = json::array();
        for (const auto& t : f.terms) terms.push_back({{"coeff", t.coeff.get_str()}, {"l", t.sl2_weight}, {"k", t.ktype_index}});
        std::vector<std::vector<json>> rows;
        for (const auto& s : split(o.a_values, ',')) {
            double a = to_double(s);
            for (const auto& v : fj_evaluate(f, a)) {
                values.push_back({{"a", a}, {"l", v.sl2_weight}, {"k", v.ktype_index}, {"value", v.value}});
                rows.push_back({a, v.sl2_weight, v.ktype_index, v.value});
            }
        }
        emit(o, {{"lambda", lambda_json(p)}, {"label", o.label}, {"power", f.power}, {"terms", terms}, {"values", values}},
             {"a", "l", "k", "value"}, rows);
        return 0;
    }
    auto p = parse_lambda(o);
    auto grid = parse_grid(o);
    NumericFamily fam;
    json head = {{"lambda", lambda_json(p)}};
    if (o.target == "siegel") {
        fam = siegel_solution(p, o.c0, o.C0, o.C1);
        head["c0"] = o.c0;
        head["C0"] = o.C0;
        head["C1"] = o.C1;
    } else if (o.target == "borel") {
        fam = to_numeric(borel_solution(p, borel_family_from_string(o.which)));
        head["which"] = o.which;
    } else {
        throw UsageError("eval expects siegel, borel or fj");
    }
    head["basis"] = to_string(fam.basis);
    json pts = json::array();
    std::vector<std::vector<json>> rows;
    for (auto [a1, a2] : grid) {
        WCache cache;
        for (std::size_t i = 0; i < fam.entries.size(); ++i) {
            auto v = fam.entries[i].eval(a1 / a2, a1 * a2, &cache);
            pts.push_back({{"a1", a1}, {"a2", a2}, {"i", i}, {"value", v.real()}, {"imag", v.imag()}});
            rows.push_back({a1, a2, i, v.real()});
        }
    }
    head["points"] = pts;
    emit(o, head, {"a1", "a2", "i", "value"}, rows);
    return 0;
}

int cmd_solve(const Options& o) {
    if (o.target != "borel") throw UsageError("solve expects borel");
    auto p = parse_lambda(o);
    auto kernel = borel_recurrence_solve(p);
    json ks = json::array(), cmp = json::array();
    for (const auto& k : kernel) ks.push_back(family_json(k));
    std::vector<std::vector<json>> rows;
    for (const auto& c : compare_borel_formulas(p)) {
        json stated = json::array(), derived = json::array();
        for (const auto& z : c.stated) stated.push_back(z.str());
        for (const auto& z : c.kernel_derived) derived.push_back(z.str());
        const std::string status = c.zero_family ? "ZERO_FAMILY" : (c.match ? "MATCH" : "MISMATCH");
        cmp.push_back({{"which", to_string(c.which)},
                       {"status", status},
                       {"monomial", c.monomial},
                       {"offending_index", c.offending_index},
                       {"stated", stated},
                       {"kernel_derived", derived}});
        rows.push_back({to_string(c.which), status, c.offending_index});
    }
    emit(o, {{"lambda", lambda_json(p)}, {"dimension", kernel.size()}, {"kernel", ks}, {"comparisons", cmp}},
         {"which", "status", "offending_index"}, rows);
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteOptions so{o.max_degree, o.seed, o.threads};
    auto rep = run_suite(o.target, so);
    std::vector<std::vector<json>> rows;
    for (const auto& c : rep.cases)
        rows.push_back({c.name, to_string(c.status) + (c.expected ? " (expected)" : ""),
                        c.max_residual ? json(*c.max_residual) : json(nullptr), c.citation});
    emit(o, rep.to_json(), {"name", "status", "max_residual", "citation"}, rows);
    return rep.ok() ? 0 : 1;
}

int cmd_table(const Options& o) {
    auto p = parse_lambda(o);
    if (o.target == "cuspidal") {
        auto rec = allowed_cuspidal_components(parabolic_from_string(o.parabolic), p);
        json j = rec.to_json();
        j["weights"] = cuspidal_weights(parabolic_from_string(o.parabolic), p);
        std::vector<std::string> cols;
        std::vector<std::vector<json>> rows;
        for (const auto& e : rec.verdict)
            for (auto it = e.begin(); it != e.end(); ++it)
                if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
        for (const auto& e : rec.verdict) {
            std::vector<json> row;
            for (const auto& c : cols) row.push_back(e.contains(c) ? e[c] : json(nullptr));
            rows.push_back(row);
        }
        emit(o, j, cols, rows);
        return 0;
    }
    if (o.target != "embeddings") throw UsageError("table expects cuspidal or embeddings");
    json st = json::array(), jac = json::array(), pr = json::array(), conv = json::array();
    std::vector<std::vector<json>> rows;
    for (const auto& t : emb_siegel_targets(p)) {
        st.push_back({{"exponent", t.exponent.get_str()}, {"weight", t.weight}});
        rows.push_back({"P_S", "", t.exponent.get_str(), "", "", true});
    }
    for (int slot : {1, 2}) {
        const int e = slot == 1 ? -p.l2 : p.l1;
        for (int par : {0, 1}) {
            bool v = emb_jacobi(p, {Rational(e), par}, slot);
            jac.push_back({{"slot", slot}, {"exponent", e}, {"mu_parity", par}, {"embeds", v}});
            rows.push_back({"P_J", slot, std::to_string(e), par, "", v});
        }
    }
    for (int pattern = 1; pattern <= 5; ++pattern) {
        auto [e1, e2] = principal_pattern_exponents(p, pattern);
        for (int a : {0, 1})
            for (int b : {0, 1}) {
                bool v = emb_principal(p, {Rational(e1), a}, {Rational(e2), b}, pattern);
                pr.push_back({{"pattern", pattern}, {"exponents", {e1, e2}}, {"mu1_parity", a}, {"mu2_parity", b}, {"embeds", v}});
                rows.push_back({"P_0", pattern, std::to_string(e1) + " " + std::to_string(e2), a, b, v});
            }
    }
    for (auto [par, branches] : {std::pair{Parabolic::P_S, std::vector<int>{2, 3}}, {Parabolic::P_J, {2, 3}}, {Parabolic::P_0, {1}}})
        for (int br : branches) conv.push_back(convergence_record(par, p, br).to_json());
    emit(o,
         {{"lambda", lambda_json(p)},
          {"xi_type", to_string(p.xi_type)},
          {"siegel", st},
          {"jacobi", jac},
          {"principal", pr},
          {"convergence", conv}},
         {"parabolic", "slot_or_pattern", "exponents", "mu1_parity", "mu2_parity", "embeds"}, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degenerate Whittaker functions and embeddings for large discrete series of Sp(4,R)"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s) {
        s->add_option("--lambda", o.lambda, "Harish-Chandra parameter L1,L2");
        s->add_option("--format", o.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
        s->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* classify_cmd = app.add_subcommand("classify", "type and Blattner parameter");
    auto* blattner_cmd = app.add_subcommand("blattner", "Blattner parameter");
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a solution family on a grid");
    auto* solve_cmd = app.add_subcommand("solve", "solve the minimal-parabolic system");
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    auto* table_cmd = app.add_subcommand("table", "decision tables");
    for (auto* s : {classify_cmd, blattner_cmd, eval_cmd, solve_cmd, verify_cmd, table_cmd}) common(s);

    eval_cmd->add_option("kind", o.target, "siegel, borel or fj")->required()->check(CLI::IsMember({"siegel", "borel", "fj"}));
    eval_cmd->add_option("--c0", o.c0, "character parameter c0");
    eval_cmd->add_option("--C0", o.C0, "coefficient of the W branch");
    eval_cmd->add_option("--C1", o.C1, "coefficient of the exponential branch");
    eval_cmd->add_option("--grid", o.grid, "a1:a2,...");
    eval_cmd->add_option("--which", o.which, "f0..f4")->check(CLI::IsMember({"f0", "f1", "f2", "f3", "f4"}));
    eval_cmd->add_option("--label", o.label, "SL2 discrete series label, e.g. +3");
    eval_cmd->add_option("--a", o.a_values, "values of a for eval fj");

    solve_cmd->add_option("kind", o.target, "borel")->required()->check(CLI::IsMember({"borel"}));

    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", o.target, "lie|beta|whittaker|siegel|borel|fj|rules|all")
        ->required()
        ->check(CLI::IsMember(suites));
    verify_cmd->add_option("--max-degree", o.max_degree, "largest d for degree sweeps")->check(CLI::Range(0, 40));
    verify_cmd->add_option("--seed", o.seed, "seed for random negative controls");

    table_cmd->add_option("kind", o.target, "cuspidal or embeddings")
        ->required()
        ->check(CLI::IsMember({"cuspidal", "embeddings"}));
    table_cmd->add_option("--parabolic", o.parabolic, "siegel, jacobi or borel (P_S, P_J, P_0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(o, false);
        if (blattner_cmd->parsed()) return cmd_classify(o, true);
        if (eval_cmd->parsed()) return cmd_eval(o);
        if (solve_cmd->parsed()) return cmd_solve(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
        if (table_cmd->parsed()) return cmd_table(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
