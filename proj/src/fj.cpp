#include "sp4/fj.hpp"

#include <cmath>
#include <stdexcept>

namespace sp4 {

SL2Label parse_sl2_label(const std::string& s) {
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) throw std::invalid_argument("bad SL2 label: " + s);
    std::size_t used = 0;
    int n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1 || n <= 1) throw std::invalid_argument("bad SL2 label: " + s);
    return {s[0], n};
}

std::string to_string(const SL2Label& l) { return std::string(1, l.sign) + std::to_string(l.weight); }

bool fj_nonvanishing(const HCParameter& p, const SL2Label& pi1) {
    require_large(p, "fj_nonvanishing");
    const char want = p.xi_type == XiType::II ? '+' : '-';
    return pi1.sign == want && (pi1.weight == p.l1 + 1 || pi1.weight == -p.l2 + 1);
}

FJSpherical fj_function(const HCParameter& p, const SL2Label& pi1) {
    if (!fj_nonvanishing(p, pi1))
        throw std::invalid_argument("fj_function: label " + to_string(pi1) + " gives the zero function");
    const int l1 = p.l1, l2 = p.l2;
    const int d = blattner(p).d;
    FJSpherical f;
    if (p.xi_type == XiType::II) {
        if (pi1.weight == l1 + 1) {
            f.power = -l2 + 2;
            f.terms.push_back({Rational(1), l1 + 1, d});
            return f;
        }
        f.power = l1 + 2;
        Rational c(1);
        for (int i = 0; 2 * i <= l1 + l2; ++i) {
            if (i > 0) c *= rational(-(-l2 + i), i);
            f.terms.push_back({c, -l2 + 2 * i + 1, -2 * l2 + 2 * i + 1});
        }
        return f;
    }
    if (pi1.weight == -l2 + 1) {
        f.power = l1 + 2;
        f.terms.push_back({Rational(1), l2 - 1, 0});
        return f;
    }
    f.power = -l2 + 2;
    Rational c(1);
    // Range 0 <= i <= floor(-(l1+l2)/2), the one that keeps v*_{-l1-l2-2i} inside [0, d].
    for (int i = 0; 2 * i <= -(l1 + l2); ++i) {
        if (i > 0) c *= rational(-(l1 + i), i);
        f.terms.push_back({c, -l1 - 2 * i - 1, -l1 - l2 - 2 * i});
    }
    return f;
}

std::vector<FJValue> fj_evaluate(const FJSpherical& f, double a) {
    if (!(a > 0)) throw std::domain_error("fj_evaluate needs a > 0");
    std::vector<FJValue> out;
    const double s = std::pow(a, f.power);
    for (const auto& t : f.terms) out.push_back({t.sl2_weight, t.ktype_index, t.coeff.get_d() * s});
    return out;
}

}  // namespace sp4
