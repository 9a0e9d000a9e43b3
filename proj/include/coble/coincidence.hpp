#pragma once

#include <vector>

#include "coble/binform.hpp"
#include "coble/linalg.hpp"

namespace coble {

// M holds the coefficient rows of three quadratics; N holds the coefficient
// rows of their pairwise Jacobians J(B,C), J(A,C), J(A,B) with the middle
// entry halved.
struct coeff_matrices {
    qmat m;
    qmat n;
};

// A triple is admissible when every member is a nonzero quadratic with two
// distinct roots and no two members share a root.
void validate_triple(const binary_form& a, const binary_form& b,
                     const binary_form& c);

// Pure coefficient arithmetic; requires degree 2 but not the full triple
// invariants, so degenerate triples can still be tabulated.
coeff_matrices build_matrices(const binary_form& a, const binary_form& b,
                              const binary_form& c);

// true iff det M = 0, i.e. the three pairwise Jacobians are linearly
// dependent
bool coincidence_condition(const binary_form& a, const binary_form& b,
                           const binary_form& c);

// Square of the composed pencil involutions sigma_A sigma_B sigma_C, where
// sigma_A swaps the roots of every member of the pencil spanned by B and C,
// and so on.  The composition is itself an involution exactly when the
// returned map is scalar.
mobius_map pompilj_residual(const binary_form& a, const binary_form& b,
                            const binary_form& c);

// Builds G2 from the third row of lambda as lambda[2][0] A + lambda[2][1] B
// + lambda[2][2] C and reports whether G2 is proportional to J(A, B), i.e.
// whether the 2x3 matrix of their coefficients has rank at most 1.
bool family_coincidence_test(const binary_form& a, const binary_form& b,
                             const qmat& lambda, const binary_form& c);

struct family_scan_entry {
    qmat lambda;
    bool singular = false;
    Rat det_m;
    bool coincident = false;
    bool marked_fix = false;
};

// Evaluates the family test on every lambda in the grid; entries appear in
// input order.  A singular lambda yields a flagged entry instead of an
// error.
std::vector<family_scan_entry> family_scan(const binary_form& a,
                                           const binary_form& b,
                                           const binary_form& c,
                                           const std::vector<qmat>& lambdas);

} // namespace coble
