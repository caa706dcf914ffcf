#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sp4/exact.hpp"
#include "sp4/params.hpp"

namespace sp4 {

// Archimedean character sgn^parity |.|^exponent.
struct RealCharacter {
    Rational exponent{0};
    int sign_parity = 0;
    RealCharacter operator*(const RealCharacter& o) const {
        return {exponent + o.exponent, (sign_parity + o.sign_parity) % 2};
    }
    bool operator==(const RealCharacter& o) const = default;
};

RealCharacter parse_character(const std::string& s);  // "sgn|1", "1|-3/2": parity|exponent

enum class Parabolic { P_S, P_J, P_0 };
std::string to_string(Parabolic p);
Parabolic parabolic_from_string(const std::string& s);  // P_S/siegel, P_J/jacobi, P_0/borel

struct DecisionRecord {
    std::string operation;
    nlohmann::json query;
    nlohmann::json verdict;
    std::string citation;
    std::vector<std::string> flags;
    nlohmann::json to_json() const;
};

struct SiegelTarget {
    Rational exponent;
    int weight = 0;
};
std::vector<SiegelTarget> emb_siegel_targets(const HCParameter& p);

// slot 1: mu |.|^{-l2} (x) D_{l1+1}; slot 2: mu |.|^{l1} (x) D_{-l2+1}. Throws on exponent mismatch.
bool emb_jacobi(const HCParameter& p, const RealCharacter& mu, int slot);

// Principal series mu1|.|^{e1} (x) mu2|.|^{e2} with the exponent pattern 1..5.
std::pair<int, int> principal_pattern_exponents(const HCParameter& p, int pattern);
bool emb_principal(const HCParameter& p, const RealCharacter& mu1, const RealCharacter& mu2, int pattern);

DecisionRecord allowed_cuspidal_components(Parabolic P, const HCParameter& p);

// Branches: P_S and P_J take 2 or 3, P_0 takes 1 or 2.
bool convergence_condition(Parabolic P, const HCParameter& p, int branch);
DecisionRecord convergence_record(Parabolic P, const HCParameter& p, int branch);

enum class LeviGroup { SL2, GL2 };
struct WeightConstraint {
    LeviGroup group = LeviGroup::SL2;
    int k = 3;
    int parity = 0;                 // of mu_inf (SL2) or mu1_inf mu2_inf^{-1} (GL2)
    std::vector<Rational> exponents;  // k-1 (SL2); (k-1)/2, -(k-1)/2 (GL2)
};
WeightConstraint gl2_weight_constraint(int k, LeviGroup group);

// Integer cuspidal weights in allowed_cuspidal_components(P, p).verdict.
std::vector<int> cuspidal_weights(Parabolic P, const HCParameter& p);

}  // namespace sp4
