#pragma once

#include <string>
#include <vector>

#include "sp4/exact.hpp"
#include "sp4/params.hpp"

namespace sp4 {

// (+, n) is the SL2 discrete series with lowest weight n, (-, n) the one with highest weight -n; n > 1.
struct SL2Label {
    char sign = '+';
    int weight = 2;
};

SL2Label parse_sl2_label(const std::string& s);  // "+3", "-4"
std::string to_string(const SL2Label& l);

struct FJTerm {
    Rational coeff;
    int sl2_weight = 0;   // w_l
    int ktype_index = 0;  // v*_k
};

// a^power * sum coeff (w_l (x) v*_k)
struct FJSpherical {
    int power = 0;
    std::vector<FJTerm> terms;
};

bool fj_nonvanishing(const HCParameter& p, const SL2Label& pi1);

// Throws std::invalid_argument for labels with fj_nonvanishing false.
FJSpherical fj_function(const HCParameter& p, const SL2Label& pi1);

struct FJValue {
    int sl2_weight = 0;
    int ktype_index = 0;
    double value = 0;
};

std::vector<FJValue> fj_evaluate(const FJSpherical& f, double a);

}  // namespace sp4
