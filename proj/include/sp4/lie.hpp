#pragma once

#include <string>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

enum class CartanParity { compact, noncompact, neither };

struct NamedElement {
    std::string name;
    ExactMatrix matrix;
    CartanParity parity = CartanParity::neither;
};

// a*beta1 + b*beta2
struct Root {
    int a = 0;
    int b = 0;
    friend bool operator==(const Root&, const Root&) = default;
};

bool is_root(const Root& r);
bool is_compact_root(const Root& r);
std::vector<Root> all_roots();

ExactMatrix J4();
ExactMatrix theta(const ExactMatrix& m);  // -transpose
bool in_sp4(const ExactMatrix& m);
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix commutator(const NamedElement& x, const NamedElement& y);

// p_+(X) / p_-(X) for a symmetric 2x2 block X.
ExactMatrix p_plus(const ExactMatrix& x2);
ExactMatrix p_minus(const ExactMatrix& x2);

// Names: K11 K22 K12 K21 T1 T2 Z H Y Yprime X Xbar Zprime H1 H2 E_e1me2 E_e1pe2 E_2e1 E_2e2.
NamedElement element(const std::string& name);
std::vector<std::string> element_names();
NamedElement root_vector(const Root& r);  // noncompact roots only

// (a,b) with [T_j, X] = (a beta1 + b beta2)(T_j) X; throws std::domain_error otherwise.
Root eigenvalue_under_cartan(const ExactMatrix& x);

struct IdentityCheck {
    std::string label;
    ExactMatrix lhs;
    ExactMatrix rhs;
    bool pass = false;
};

// The six root-vector expressions in terms of the Iwasawa data (four displayed lines).
std::vector<IdentityCheck> iwasawa_identities();
std::vector<IdentityCheck> verify_identities(std::vector<IdentityCheck> ids);
std::vector<IdentityCheck> verify_iwasawa_lemma();

// sl2 relations [H,X]=2X, [H,Xbar]=-2Xbar, [X,Xbar]=H.
std::vector<IdentityCheck> verify_sl2_triple();

// Symmetry data relating the two large discrete series types.
ExactMatrix mvw_delta();
ExactMatrix mvw_xi();
ExactMatrix n0_element(const Rational& u0, const Rational& u1, const Rational& u2, const Rational& u3);

}  // namespace sp4
