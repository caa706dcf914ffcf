#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sp4/params.hpp"
#include "sp4/radial.hpp"

namespace sp4 {

enum class FamilyBasis { Ustar, Vstar };
std::string to_string(FamilyBasis b);

template <class C>
struct CoefficientFamily {
    FamilyBasis basis = FamilyBasis::Ustar;
    std::vector<RadialFunction<C>> entries;  // index i in [0, d]
    std::string label;
};

using NumericFamily = CoefficientFamily<std::complex<double>>;
using ExactFamily = CoefficientFamily<GaussianRational>;

NumericFamily to_numeric(const ExactFamily& f);

// u*-coefficients h to v*-coefficients f = beta^{-1} h, and back.
NumericFamily to_vstar(const NumericFamily& f);
NumericFamily to_ustar(const NumericFamily& f);

// Moderate-growth solution in the u* basis; C0 multiplies the W branch, C1 the exponential branch.
NumericFamily siegel_solution(const HCParameter& p, double c0, double C0 = 1, double C1 = 0);

enum class BorelFamily { f0, f1, f2, f3, f4 };
std::string to_string(BorelFamily w);
BorelFamily borel_family_from_string(const std::string& s);
constexpr std::array<BorelFamily, 5> kBorelFamilies{BorelFamily::f0, BorelFamily::f1, BorelFamily::f2,
                                                    BorelFamily::f3, BorelFamily::f4};

// Stated monomial family in the v* basis, exact coefficients.
ExactFamily borel_solution(const HCParameter& p, BorelFamily which);

using GridPoint = std::pair<double, double>;  // (a1, a2)

std::vector<GridPoint> default_radial_grid();  // a1/a2 in {0.2,0.5,1,2,5}, a1 a2 in {0.5,1,2}

struct EquationResidual {
    std::string name;  // "A", "B", "C" (u* system) or "A'", "B'", "C'" (v* system)
    int index = 0;
    double max_abs = 0;
    double max_rel = 0;
    bool exact_zero = false;  // only meaningful on the exact path
};

struct ResidualReport {
    std::string system;  // "ustar" or "vstar"
    bool exact_path = false;
    bool exact_zero = false;
    double max_abs = 0;
    double max_rel = 0;
    double tolerance = 1e-6;
    bool pass = false;
    std::vector<EquationResidual> equations;
};

// Ustar families are tested against (A_i),(B_i),(C_i); Vstar families against (A'_i),(B'_i),(C'_j).
// Type III families are transported to the type II system of (-Lambda2, -Lambda1).
ResidualReport radial_system_residual(const NumericFamily& fam, const HCParameter& p,
                                      const DegenerateCharacter& chi, const std::vector<GridPoint>& grid);
// Exact path (pass iff every equation vanishes identically) when c0 = 0 and all terms are monomials.
ResidualReport radial_system_residual(const ExactFamily& fam, const HCParameter& p,
                                      const DegenerateCharacter& chi, const std::vector<GridPoint>& grid);

// Primed system with c0 = 0 on the ansatz span of three monomials a1^m a2^n.
struct BorelAnsatz {
    int d = 0;
    std::array<std::pair<int, int>, 3> monomials;
    ExactMatrix system;  // columns indexed by 3*i + m
};

BorelAnsatz borel_ansatz(const HCParameter& p);
std::vector<ExactFamily> borel_recurrence_solve(const HCParameter& p);

struct BorelComparison {
    BorelFamily which = BorelFamily::f0;
    bool match = false;
    bool zero_family = false;     // stated range is empty
    int monomial = 0;             // which ansatz monomial carries the family
    int offending_index = -1;     // first i where the stated and kernel-derived sequences differ
    std::vector<GaussianRational> stated;
    std::vector<GaussianRational> kernel_derived;  // normalized at the stated leading entry
};

std::vector<BorelComparison> compare_borel_formulas(const HCParameter& p);

struct ShiftCheck {
    int i = 0;
    double max_rel = 0;
    bool pass = false;
};

struct RaisingLoweringReport {
    double c0 = 0;
    double tolerance = 1e-8;
    std::vector<ShiftCheck> shifts;  // i = 0 .. d-1
    bool shifts_pass = false;
    // c0 < 0: the lowering coefficient mu^2 - (i - (d+1)/2)^2 as printed next to the identity
    bool printed_coefficient_checked = false;
    bool printed_coefficient_matches = false;
    double printed_coefficient_max_rel = 0;
    int anchor_index = 0;
    Rational anchor_exponent{0};  // power of y1
    double anchor_constant = 1;   // (4 pi |c0|)^{anchor_exponent}
    double anchor_max_rel = 0;
    bool anchor_pass = false;
    bool pass = false;
};

// rhs_mu_offset perturbs mu on the right-hand sides only (negative control).
RaisingLoweringReport raising_lowering_check(const HCParameter& p, double c0, const std::vector<double>& y1_grid,
                                             double rhs_mu_offset = 0);

// y^{n/2} exp(-2 pi |m| y) exp(2 pi i m x) for holomorphic m >= 0 or antiholomorphic m <= 0, else 0.
std::complex<double> sl2_whittaker(int n, double m, double x, double y, bool holomorphic);

enum class ModuleKind { siegel, jacobi, borel };
std::string to_string(ModuleKind k);
ModuleKind module_kind_from_string(const std::string& s);

struct JacobiPiece {
    int exponent = 0;  // power of |.|
    int weight = 0;
    char sign = '+';
};

struct ModuleDescriptor {
    ModuleKind kind = ModuleKind::siegel;
    std::vector<int> weights;                       // siegel
    std::vector<JacobiPiece> jacobi;                // jacobi
    std::vector<std::pair<int, int>> borel_pairs;   // borel: exponents of the two |.| factors
    std::string citation;
};

ModuleDescriptor sl2_module_descriptor(ModuleKind which, const HCParameter& p);

}  // namespace sp4
