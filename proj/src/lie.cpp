#include "sp4/lie.hpp"

#include <stdexcept>

namespace sp4 {

namespace {

const GaussianRational I = GaussianRational::i();
const GaussianRational HALF = GaussianRational(Rational(1, 2));

ExactMatrix E(std::size_t i, std::size_t j) { return ExactMatrix::unit(4, i, j); }

ExactMatrix block(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
    ExactMatrix m(4, 4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
            m(r, s) = a(r, s);
            m(r, s + 2) = b(r, s);
            m(r + 2, s) = c(r, s);
            m(r + 2, s + 2) = d(r, s);
        }
    return m;
}

ExactMatrix two(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d) {
    return ExactMatrix{{a, b}, {c, d}};
}

ExactMatrix zero2() { return ExactMatrix(2, 2); }

}  // namespace

bool is_root(const Root& r) {
    for (const auto& x : all_roots())
        if (x == r) return true;
    return false;
}

bool is_compact_root(const Root& r) { return (r.a == 1 && r.b == -1) || (r.a == -1 && r.b == 1); }

std::vector<Root> all_roots() { return {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}; }

ExactMatrix J4() {
    ExactMatrix id = ExactMatrix::identity(2);
    return block(zero2(), id, GaussianRational(-1) * id, zero2());
}

ExactMatrix theta(const ExactMatrix& m) { return GaussianRational(-1) * m.transpose(); }

bool in_sp4(const ExactMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) return false;
    return (m.transpose() * J4() + J4() * m).is_zero();
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }

ExactMatrix commutator(const NamedElement& x, const NamedElement& y) { return commutator(x.matrix, y.matrix); }

ExactMatrix p_plus(const ExactMatrix& x) { return block(x, I * x, I * x, GaussianRational(-1) * x); }

ExactMatrix p_minus(const ExactMatrix& x) {
    return block(x, GaussianRational(-1) * I * x, GaussianRational(-1) * I * x, GaussianRational(-1) * x);
}

std::vector<std::string> element_names() {
    return {"K11", "K22", "K12", "K21", "T1", "T2", "Z", "H", "Y", "Yprime", "X", "Xbar", "Zprime",
            "H1", "H2", "E_e1me2", "E_e1pe2", "E_2e1", "E_2e2"};
}

NamedElement element(const std::string& name) {
    using CP = CartanParity;
    const GaussianRational m1(-1);
    if (name == "K11") return {name, m1 * I * E(1, 3) + I * E(3, 1), CP::compact};
    if (name == "K22") return {name, m1 * I * E(2, 4) + I * E(4, 2), CP::compact};
    if (name == "K12") {
        ExactMatrix m{{0, 1, 0, -I}, {-1, 0, -I, 0}, {0, I, 0, 1}, {I, 0, -1, 0}};
        return {name, HALF * m, CP::compact};
    }
    if (name == "K21") {
        ExactMatrix m{{0, -1, 0, -I}, {1, 0, -I, 0}, {0, I, 0, -1}, {I, 0, 1, 0}};
        return {name, HALF * m, CP::compact};
    }
    if (name == "T1") return {name, I * element("K11").matrix, CP::compact};
    if (name == "T2") return {name, I * element("K22").matrix, CP::compact};
    if (name == "Z") {
        ExactMatrix id = ExactMatrix::identity(2);
        return {name, block(zero2(), m1 * I * id, I * id, zero2()), CP::compact};
    }
    if (name == "H") return {name, element("K11").matrix - element("K22").matrix, CP::compact};
    if (name == "Y") {
        ExactMatrix j2 = two(0, 1, -1, 0);
        return {name, block(j2, zero2(), zero2(), j2), CP::compact};
    }
    if (name == "Yprime") {
        ExactMatrix j2p = two(0, 1, 1, 0);
        return {name, block(zero2(), j2p, m1 * j2p, zero2()), CP::compact};
    }
    if (name == "X")
        return {name, HALF * (element("Y").matrix - I * element("Yprime").matrix), CP::compact};
    if (name == "Xbar")
        return {name, HALF * (m1 * element("Y").matrix - I * element("Yprime").matrix), CP::compact};
    if (name == "Zprime") return {name, element("X").matrix - element("Xbar").matrix, CP::compact};
    if (name == "H1") return {name, E(1, 1) - E(3, 3), CP::noncompact};
    if (name == "H2") return {name, E(2, 2) - E(4, 4), CP::noncompact};
    if (name == "E_e1me2") return {name, E(1, 2) - E(4, 3), CP::neither};
    if (name == "E_e1pe2") return {name, E(1, 4) + E(2, 3), CP::neither};
    if (name == "E_2e1") return {name, E(1, 3), CP::neither};
    if (name == "E_2e2") return {name, E(2, 4), CP::neither};
    throw std::invalid_argument("unknown element: " + name);
}

NamedElement root_vector(const Root& r) {
    if (!is_root(r)) throw std::invalid_argument("not a root");
    if (is_compact_root(r)) throw std::invalid_argument("compact root: use K12/K21");
    ExactMatrix x;
    if (r.a != 0 && r.b == 0) x = two(1, 0, 0, 0);
    else if (r.a == 0) x = two(0, 0, 0, 1);
    else x = two(0, 1, 1, 0);
    bool plus = (r.a + r.b) > 0;
    std::string name = "Xroot(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")";
    return {name, plus ? p_plus(x) : p_minus(x), CartanParity::noncompact};
}

Root eigenvalue_under_cartan(const ExactMatrix& x) {
    if (x.is_zero()) throw std::domain_error("zero matrix has no weight");
    int ab[2];
    const char* names[2] = {"T1", "T2"};
    for (int j = 0; j < 2; ++j) {
        ExactMatrix c = commutator(element(names[j]).matrix, x);
        std::size_t r0 = 0, c0 = 0;
        bool found = false;
        for (std::size_t r = 0; r < 4 && !found; ++r)
            for (std::size_t s = 0; s < 4 && !found; ++s)
                if (!x(r, s).is_zero()) r0 = r, c0 = s, found = true;
        GaussianRational lam = c(r0, c0) / x(r0, c0);
        if (c != lam * x) throw std::domain_error("not a simultaneous eigenvector of the compact Cartan");
        GaussianRational coef = lam / I;
        if (!coef.is_real() || coef.re().get_den() != 1)
            throw std::domain_error("eigenvalue is not an integral weight");
        ab[j] = static_cast<int>(coef.re().get_num().get_si());
    }
    return {ab[0], ab[1]};
}

std::vector<IdentityCheck> iwasawa_identities() {
    const GaussianRational two_i = GaussianRational(2) * I;
    const GaussianRational m1(-1);
    auto el = [](const char* n) { return element(n).matrix; };
    std::vector<IdentityCheck> out;
    out.push_back({"X(2,0) = 2i E_2e1 + H1 + K11", root_vector({2, 0}).matrix,
                   two_i * el("E_2e1") + el("H1") + el("K11")});
    out.push_back({"X-(2,0) = -2i E_2e1 + H1 - K11", root_vector({-2, 0}).matrix,
                   m1 * two_i * el("E_2e1") + el("H1") - el("K11")});
    out.push_back({"X(0,2) = 2i E_2e2 + H2 + K22", root_vector({0, 2}).matrix,
                   two_i * el("E_2e2") + el("H2") + el("K22")});
    out.push_back({"X-(0,2) = -2i E_2e2 + H2 - K22", root_vector({0, -2}).matrix,
                   m1 * two_i * el("E_2e2") + el("H2") - el("K22")});
    out.push_back({"X(1,1) = 2(E_e1-e2 + i E_e1+e2) + 2 K21", root_vector({1, 1}).matrix,
                   GaussianRational(2) * (el("E_e1me2") + I * el("E_e1pe2")) + GaussianRational(2) * el("K21")});
    out.push_back({"X-(1,1) = 2(E_e1-e2 - i E_e1+e2) - 2 K12", root_vector({-1, -1}).matrix,
                   GaussianRational(2) * (el("E_e1me2") - I * el("E_e1pe2")) - GaussianRational(2) * el("K12")});
    return out;
}

std::vector<IdentityCheck> verify_identities(std::vector<IdentityCheck> ids) {
    for (auto& id : ids) id.pass = (id.lhs == id.rhs);
    return ids;
}

std::vector<IdentityCheck> verify_iwasawa_lemma() { return verify_identities(iwasawa_identities()); }

std::vector<IdentityCheck> verify_sl2_triple() {
    auto H = element("H").matrix, X = element("X").matrix, Xb = element("Xbar").matrix;
    return verify_identities({{"[H,X] = 2X", commutator(H, X), GaussianRational(2) * X},
                              {"[H,Xbar] = -2Xbar", commutator(H, Xb), GaussianRational(-2) * Xb},
                              {"[X,Xbar] = H", commutator(X, Xb), H}});
}

ExactMatrix mvw_delta() {
    ExactMatrix id = ExactMatrix::identity(2);
    return block(GaussianRational(-1) * id, zero2(), zero2(), id);
}

ExactMatrix mvw_xi() {
    ExactMatrix j2p = two(0, 1, 1, 0);
    return block(j2p, zero2(), zero2(), j2p);
}

ExactMatrix n0_element(const Rational& u0, const Rational& u1, const Rational& u2, const Rational& u3) {
    ExactMatrix a{{1, 0, GaussianRational(u1), GaussianRational(u2)},
                  {0, 1, GaussianRational(u2), GaussianRational(u3)},
                  {0, 0, 1, 0},
                  {0, 0, 0, 1}};
    ExactMatrix b{{1, GaussianRational(u0), 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, GaussianRational(-u0), 1}};
    return a * b;
}

}  // namespace sp4
