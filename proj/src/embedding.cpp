#include "sp4/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace sp4 {

namespace {

int parity(long k) { return static_cast<int>(((k % 2) + 2) % 2); }

nlohmann::json lambda_json(const HCParameter& p) { return {p.l1, p.l2}; }

std::string rat(const Rational& r) { return r.get_str(); }

}  // namespace

RealCharacter parse_character(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("character must be parity|exponent: " + s);
    std::string sg = s.substr(0, bar), ex = s.substr(bar + 1);
    RealCharacter c;
    if (sg == "1" || sg == "0" || sg == "triv") c.sign_parity = 0;
    else if (sg == "sgn") c.sign_parity = 1;
    else throw std::invalid_argument("character sign must be 1 or sgn: " + s);
    try {
        c.exponent = Rational(ex);
        c.exponent.canonicalize();
    } catch (const std::exception&) {
        throw std::invalid_argument("bad character exponent: " + s);
    }
    return c;
}

std::string to_string(Parabolic p) {
    switch (p) {
        case Parabolic::P_S: return "P_S";
        case Parabolic::P_J: return "P_J";
        case Parabolic::P_0: return "P_0";
    }
    return "?";
}

Parabolic parabolic_from_string(const std::string& s) {
    if (s == "P_S" || s == "siegel") return Parabolic::P_S;
    if (s == "P_J" || s == "jacobi") return Parabolic::P_J;
    if (s == "P_0" || s == "borel" || s == "minimal") return Parabolic::P_0;
    throw std::invalid_argument("unknown parabolic: " + s);
}

nlohmann::json DecisionRecord::to_json() const {
    return {{"operation", operation}, {"query", query}, {"verdict", verdict}, {"citation", citation}, {"flags", flags}};
}

std::vector<SiegelTarget> emb_siegel_targets(const HCParameter& p) {
    require_large(p, "emb_siegel_targets");
    const int l1 = p.l1, l2 = p.l2;
    if (p.xi_type == XiType::II)
        return {{rational(l1 - l2, 2), l1 + l2 + 1}, {rational(l1 + l2, 2), l1 - l2 + 1}};
    return {{rational(l1 - l2, 2), -l1 - l2 + 1}, {rational(-(l1 + l2), 2), l1 - l2 + 1}};
}

bool emb_jacobi(const HCParameter& p, const RealCharacter& mu, int slot) {
    require_large(p, "emb_jacobi");
    if (slot != 1 && slot != 2) throw std::invalid_argument("emb_jacobi: slot must be 1 or 2");
    const int e = slot == 1 ? -p.l2 : p.l1;
    if (mu.exponent != e)
        throw std::invalid_argument("emb_jacobi: slot " + std::to_string(slot) + " needs exponent " + std::to_string(e) +
                                    ", got " + rat(mu.exponent));
    return mu.sign_parity == parity(slot == 1 ? p.l2 : p.l1);
}

std::pair<int, int> principal_pattern_exponents(const HCParameter& p, int pattern) {
    require_large(p, "emb_principal");
    const int l1 = p.l1, l2 = p.l2;
    const bool II = p.xi_type == XiType::II;
    switch (pattern) {
        case 1: return II ? std::pair{-l2, l1} : std::pair{l1, -l2};
        case 2: return II ? std::pair{l1, l2} : std::pair{-l2, -l1};
        case 3: return II ? std::pair{l1, -l2} : std::pair{-l2, l1};
        case 4:
        case 5: return II ? std::pair{-l1, l2} : std::pair{l2, -l1};
    }
    throw std::invalid_argument("emb_principal: pattern must be 1..5");
}

bool emb_principal(const HCParameter& p, const RealCharacter& mu1, const RealCharacter& mu2, int pattern) {
    auto [e1, e2] = principal_pattern_exponents(p, pattern);
    if (mu1.exponent != e1 || mu2.exponent != e2)
        throw std::invalid_argument("emb_principal: pattern " + std::to_string(pattern) + " needs exponents (" +
                                    std::to_string(e1) + ", " + std::to_string(e2) + ")");
    switch (pattern) {
        case 1: return mu1.sign_parity == parity(p.l2) && mu2.sign_parity == parity(p.l1 + 1);
        case 2:
        case 3: return (mu1 * mu2).sign_parity == parity(p.l1 + p.l2 + 1);
        default: return false;
    }
}

DecisionRecord allowed_cuspidal_components(Parabolic P, const HCParameter& p) {
    require_large(p, "allowed_cuspidal_components");
    const int l1 = p.l1, l2 = p.l2;
    const bool II = p.xi_type == XiType::II;
    DecisionRecord r;
    r.operation = "allowed_cuspidal_components";
    r.query = {{"parabolic", to_string(P)}, {"lambda", lambda_json(p)}, {"xi_type", to_string(p.xi_type)}};
    nlohmann::json v = nlohmann::json::array();
    switch (P) {
        case Parabolic::P_S:
            for (const auto& t : emb_siegel_targets(p)) v.push_back({{"weight", t.weight}, {"exponent", rat(t.exponent)}});
            r.citation = "cuspidal support along the Siegel parabolic: GL2 discrete series of the two Siegel embeddings";
            break;
        case Parabolic::P_J: {
            const std::string s = II ? "+" : "-";
            v.push_back({{"weight", l1 + 1}, {"sign", s}, {"mu_parity", parity(l2)}, {"exponent", std::to_string(-l2)}});
            v.push_back({{"weight", -l2 + 1}, {"sign", s}, {"mu_parity", parity(l1)}, {"exponent", std::to_string(l1)}});
            r.citation = "cuspidal support along the Jacobi parabolic: SL2 discrete series and GL1 sign from the Jacobi embeddings";
            r.flags.push_back("printed clause reads sigma_inf = D_{-l2} next to D_{-l2+1}; D_{-l2+1} used");
            break;
        }
        case Parabolic::P_0:
            if (II) {
                v.push_back({{"mu1_parity", parity(l1 + 1)}, {"mu2_parity", parity(l2)},
                             {"exponents", {std::to_string(l1), std::to_string(-l2)}}});
                r.flags.push_back("printed hypothesis l2 > 1 is empty on type II (l2 < 0); presumably -l2 > 1");
            } else {
                v.push_back({{"mu1_parity", parity(-l2 + 1)}, {"mu2_parity", parity(l1)},
                             {"exponents", {std::to_string(-l2), std::to_string(l1)}}});
            }
            r.citation = "cuspidal support along the minimal parabolic: signs of mu1, mu2 at infinity";
            break;
    }
    r.verdict = v;
    return r;
}

bool convergence_condition(Parabolic P, const HCParameter& p, int branch) {
    require_large(p, "convergence_condition");
    const int l1 = p.l1, l2 = p.l2;
    const bool II = p.xi_type == XiType::II;
    switch (P) {
        case Parabolic::P_S:
            if (branch == 2) return l1 - l2 > 3;
            if (branch == 3) return II ? l1 + l2 > 3 : -l1 - l2 > 3;
            break;
        case Parabolic::P_J:
            if (branch == 2) return -l2 > 2;
            if (branch == 3) return l1 > 2;
            break;
        case Parabolic::P_0:
            if (branch == 1 || branch == 2) return II ? (l1 > -l2 + 1 && l2 > 1) : (-l2 > l1 + 1 && l1 > 1);
            break;
    }
    throw std::invalid_argument("convergence_condition: invalid branch " + std::to_string(branch) + " for " +
                                to_string(P));
}

DecisionRecord convergence_record(Parabolic P, const HCParameter& p, int branch) {
    DecisionRecord r;
    r.operation = "convergence_condition";
    r.query = {{"parabolic", to_string(P)}, {"lambda", lambda_json(p)}, {"branch", branch}};
    r.verdict = convergence_condition(P, p, branch);
    const bool II = p.xi_type == XiType::II;
    switch (P) {
        case Parabolic::P_S:
            r.citation = branch == 2 ? "Siegel isomorphism range: l1 - l2 > 3"
                                     : (II ? "Siegel isomorphism range: l1 + l2 > 3" : "Siegel isomorphism range: -l1 - l2 > 3");
            break;
        case Parabolic::P_J:
            r.citation = branch == 2 ? "Jacobi isomorphism range: -l2 > 2" : "Jacobi isomorphism range: l1 > 2";
            break;
        case Parabolic::P_0:
            r.citation = II ? "minimal parabolic isomorphism range: l1 > -l2 + 1 and l2 > 1"
                            : "minimal parabolic isomorphism range: -l2 > l1 + 1 and l1 > 1";
            if (II) {
                r.flags.push_back("printed hypothesis l2 > 1 is empty on type II (l2 < 0); presumably -l2 > 1");
                r.flags.push_back(std::string("reading -l2 > 1 gives ") +
                                  ((p.l1 > -p.l2 + 1 && -p.l2 > 1) ? "true" : "false"));
            }
            break;
    }
    return r;
}

WeightConstraint gl2_weight_constraint(int k, LeviGroup group) {
    if (k < 3) throw std::invalid_argument("gl2_weight_constraint: needs k >= 3, got " + std::to_string(k));
    WeightConstraint w;
    w.group = group;
    w.k = k;
    w.parity = parity(k);
    if (group == LeviGroup::SL2) w.exponents = {Rational(k - 1)};
    else w.exponents = {rational(k - 1, 2), rational(-(k - 1), 2)};
    for (auto& e : w.exponents) e.canonicalize();
    return w;
}

std::vector<int> cuspidal_weights(Parabolic P, const HCParameter& p) {
    std::vector<int> w;
    for (const auto& e : allowed_cuspidal_components(P, p).verdict)
        if (e.contains("weight")) w.push_back(e["weight"].get<int>());
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace sp4
