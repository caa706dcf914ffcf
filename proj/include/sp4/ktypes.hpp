#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sp4/exact.hpp"

namespace sp4 {

struct DominantWeight {
    int L1 = 0;
    int L2 = 0;
    DominantWeight() = default;
    DominantWeight(int l1, int l2);  // throws std::invalid_argument unless l1 >= l2
    int d() const { return L1 - L2; }
};

enum class Basis { V, U, Vstar, Ustar };
enum class Generator { Z, H, X, Xbar, Zprime };

std::string to_string(Basis b);
std::string to_string(Generator g);

struct KTypeVector {
    DominantWeight weight;
    Basis basis = Basis::V;
    ExactVector coords;

    static KTypeVector unit(const DominantWeight& w, Basis b, int k);
};

// Image under the displayed generator rules. Index shifts out of [0, d] drop the term.
KTypeVector act(Generator g, const KTypeVector& v);

// Matrix of act(g, .) in the given basis; column k is the image of the k-th basis vector.
ExactMatrix action_matrix(Generator g, const DominantWeight& w, Basis b);

// beta^n_{ij}: coefficient of x1^j x2^(n-j) in (x1 + i x2)^i (x1 - i x2)^(n-i).
ExactMatrix beta_matrix(int n);

struct BetaItem {
    std::string item;  // "1".."7"; "5a"/"5b" for the two halves of item 5
    bool pass = false;
};

using BetaProvider = std::function<ExactMatrix(int)>;

// Items as stated, each tested on every unit vector f = e_j with h = beta^n f.
std::vector<BetaItem> check_beta_identities(int n, const BetaProvider& beta = beta_matrix);

// Item 2 with the coefficients of h_i and h_{i+1} exchanged.
bool check_beta_item2_exchanged(int n, const BetaProvider& beta = beta_matrix);

// V <-> U and Vstar <-> Ustar.
KTypeVector change_basis(const KTypeVector& v, Basis to);

// <v*_k, v_j> = (-1)^k delta_{j, d-k}; arguments in Vstar and V coordinates.
GaussianRational dual_pairing(const KTypeVector& vstar, const KTypeVector& v);

}  // namespace sp4
