#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coble/binform.hpp"
#include "coble/linalg.hpp"

namespace coble {

// Plane form of degree m in X0, X1, X2, kept as a sorted list of nonzero
// terms; exponent triples descend lexicographically by (i, j).
struct plane_term {
    std::array<int, 3> e;
    Rat c;

    bool operator==(const plane_term&) const = default;
};

class plane_form {
public:
    plane_form() : deg_(0) {}
    plane_form(int degree, std::vector<plane_term> terms);

    int degree() const { return deg_; }
    const std::vector<plane_term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const plane_form&) const = default;

private:
    int deg_;
    std::vector<plane_term> terms_;
};

// degree-m exponent triples in the canonical term order
std::vector<std::array<int, 3>> monomial_basis(int m);

struct parametrization_witness {
    binary_form a, b, c;
    binary_form g0, g1, g2;
    qmat lambda;
};

// Map P^1 -> P^2 by three degree-6 forms: linearly independent and with no
// common root.  The witness records a factored origin F0 = B C G0,
// F1 = A C G1, F2 = A B G2 with (G0,G1,G2) = Lambda (A,B,C).
struct sextic_parametrization {
    binary_form f0, f1, f2;
    std::optional<parametrization_witness> witness;
};

// Validates degrees, independence (DependentForms) and base-point-freeness
// (BasePoint).
sextic_parametrization make_parametrization(const binary_form& f0,
                                            const binary_form& f1,
                                            const binary_form& f2);

// The factored construction from three quadrics and an invertible matrix.
// Refuses squares of linear forms, non-coprime pairs and singular Lambda
// (DegenerateInput), then validates the assembled triple.
sextic_parametrization build_parametrization(const binary_form& a,
                                             const binary_form& b,
                                             const binary_form& c,
                                             const qmat& lambda);

// D(F0, F1, F2); always a form of degree 6 deg(D)
binary_form pullback(const plane_form& d, const sextic_parametrization& g);

// The degree-20 form whose roots are the parameter preimages of the nodes:
// gcd of the three pairwise t-resultants of the divided differences
// Q_ij(s;t) = (F_i(s)F_j(t) - F_j(s)F_i(t))/(s0 t1 - s1 t0).
// Raises NotTenNodal when the degree is not exactly 20.
binary_form double_point_form(const sextic_parametrization& g);

// Dimension of { D of degree m : W^r divides pullback(D) }, the linear
// system of degree-m curves with multiplicity >= r at every node.  When
// 6m < 20r the condition collapses to pullback(D) = 0 and W is not needed.
int nodal_system_dimension(const sextic_parametrization& g, int m, int r);

// The implicit equation: generator of { D of degree 6 : pullback(D) = 0 },
// integral, primitive, first coefficient positive.  NonBirational when the
// kernel is not a line.
plane_form implicitize(const sextic_parametrization& g);

struct coble_report {
    bool is_coble = false;
    std::string reason; // error code or failed condition; empty on success

    bool w_ok = false;
    int w_degree = -1;
    bool w_square_free = false;
    // witness factors divide W; only meaningful when a witness is present
    std::optional<bool> witness_factors_divide_w;

    int dim_cubics_through_nodes = -1;
    int dim_double_sextics = -1;

    bool implicit_ok = false;
    plane_form implicit;

    // dim Gr(3,7) = 12 for nets of sextic binary forms, minus dim PGL2 = 3
    int net_family_dim = 12;
    int reparametrization_dim = 3;
    int moduli_dim = 9;
};

// Runs the whole certification chain, recording failures instead of
// raising.
coble_report coble_check(const sextic_parametrization& g);

} // namespace coble
