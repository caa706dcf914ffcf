#include "sp4/params.hpp"

#include <algorithm>

namespace sp4 {

std::string to_string(XiType t) {
    switch (t) {
        case XiType::I: return "I";
        case XiType::II: return "II";
        case XiType::III: return "III";
        case XiType::IV: return "IV";
    }
    return "?";
}

void DegenerateCharacter::validate() const {
    if (c3 != 0) throw UnsupportedType("only characters with c3 = 0 are supported");
}

HCParameter classify(int l1, int l2) {
    if (l1 == 0 || l2 == 0) throw ParameterError("not regular: zero coordinate");
    if (l1 == l2) throw ParameterError("not regular (l1 = l2)");
    if (l1 == -l2) throw ParameterError("not regular (l1 = -l2)");
    if (l1 < l2) throw ParameterError("not a Harish-Chandra parameter: need l1 > l2");
    XiType t;
    if (l2 > 0) t = XiType::I;
    else if (l1 < 0) t = XiType::IV;
    else t = (l1 > -l2) ? XiType::II : XiType::III;
    return {l1, l2, t};
}

BlattnerParameter blattner(const HCParameter& p) {
    int L1 = p.l1, L2 = p.l2;
    switch (p.xi_type) {
        case XiType::I: L1 += 1, L2 += 2; break;
        case XiType::II: L1 += 1; break;
        case XiType::III: L2 -= 1; break;
        case XiType::IV: L1 -= 2, L2 -= 1; break;
    }
    return {L1, L2, L1 - L2};
}

void require_large(const HCParameter& p, const std::string& what) {
    if (!p.large()) throw UnsupportedType(what + ": type " + to_string(p.xi_type) + " is not supported (II or III only)");
}

HCParameter contragredient(const HCParameter& p) { return classify(-p.l2, -p.l1); }

}  // namespace sp4

namespace sp4 {

std::vector<HCParameter> large_parameters(int max_d, int min_d) {
    std::vector<HCParameter> out;
    for (int d = std::max(min_d, 0); d <= max_d; ++d) {
        // type II: d = l1 - l2 + 1 with l1 > -l2 > 0
        for (int l2 = -1; 2 * -l2 + 2 <= d; --l2) out.push_back(classify(d - 1 + l2, l2));
        // type III: d = l1 - l2 + 1 with -l2 > l1 > 0
        for (int l1 = 1; 2 * l1 + 2 <= d; ++l1) out.push_back(classify(l1, l1 - d + 1));
    }
    return out;
}

}  // namespace sp4
