#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sp4/ktypes.hpp"

namespace sp4 {

enum class XiType { I, II, III, IV };

std::string to_string(XiType t);

// Rejections from classify; the message names the failed condition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called on a type it does not cover (e.g. Siegel solutions for holomorphic parameters).
class UnsupportedType : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HCParameter {
    int l1 = 0;
    int l2 = 0;
    XiType xi_type = XiType::II;
    bool large() const { return xi_type == XiType::II || xi_type == XiType::III; }
};

struct BlattnerParameter {
    int L1 = 0;
    int L2 = 0;
    int d = 0;
    DominantWeight weight() const { return {L1, L2}; }
};

struct DegenerateCharacter {
    double c0 = 0;
    double c3 = 0;
    void validate() const;  // throws UnsupportedType unless c3 == 0
};

HCParameter classify(int l1, int l2);
BlattnerParameter blattner(const HCParameter& p);
void require_large(const HCParameter& p, const std::string& what);

// (l1, l2) -> (-l2, -l1); exchanges the two large types.
HCParameter contragredient(const HCParameter& p);

}  // namespace sp4

namespace sp4 {

// Types II and III with min_d <= d <= max_d, ordered by (d, type, l1).
std::vector<HCParameter> large_parameters(int max_d, int min_d = 0);

}  // namespace sp4
