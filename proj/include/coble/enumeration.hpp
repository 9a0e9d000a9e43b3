#pragma once

#include <string>
#include <vector>

#include "coble/picard.hpp"
#include "coble/rational.hpp"

namespace coble {

// Search box for classes dL - sum m_i E_i with d^2 - sum m_i^2 =
// self_intersection, -3d + sum m_i = k_pairing and |d| <= degree_bound.
struct class_query {
    int n_points = 10;
    Int self_intersection = -1;
    Int k_pairing = -1;
    Int degree_bound = 6;
};

// Presets "minus-one", "root", "isotropic".  The first two are exact for
// N <= 8 under the default bound; verification mode proves it.
class_query preset_query(const std::string& preset, int n_points);

// All solutions in the box, ordered lexicographically by (d, m_1, ..., m_N).
// With verify_bound set, the search is re-run with the bound raised by one
// and any new solution raises BoundTooSmall.
std::vector<divisor_class> enumerate_classes(const class_query& q,
                                             bool verify_bound = false);

struct extension_options {
    bool all_solutions = false;
    Int degree_cap = 6;
    // all-solutions mode refuses to return a truncated list; hitting either
    // cap raises BoundExceeded instead.
    size_t max_solutions = 64;
    size_t node_budget = 4000000;
};

// Completes a pairwise-orthogonal set of at most nine (-1)-classes with
// class.K = -1 on a ten-point blow-up to a full frame of ten.  Each returned
// completion lists the given classes first, then the new ones in
// lexicographic order.  First-solution mode returns a single completion
// found by iterative deepening on the degree; all-solutions mode returns
// every completion with degrees up to degree_cap, sorted by largest degree
// used, then lexicographically.
//
// When no completion exists for linear reasons the NonExtendable error
// carries an integrality certificate: an integer combination of the
// constraints that every completing class would have to satisfy, whose
// gcd does not divide its right-hand side.
std::vector<std::vector<divisor_class>> extend_exceptional(
    const std::vector<divisor_class>& given,
    const extension_options& opts = extension_options{});

// E -> E - K, taking an exceptional class to the class of the elliptic
// curve through it (square 0, orthogonal to K).
divisor_class elliptic_from_exceptional(const blowup_surface& s,
                                        const divisor_class& e);

// Isotropic sequences: classes with F_i^2 = 0, F_i.K = 0, F_i.F_j = 1.
void validate_isotropic_sequence(const blowup_surface& s,
                                 const std::vector<divisor_class>& seq);

std::vector<divisor_class> extend_isotropic(
    const blowup_surface& s, const std::vector<divisor_class>& seq,
    const extension_options& opts = extension_options{});

// H = (F_1 + ... + F_10)/3 for a full isotropic sequence; H^2 = 10 and
// H.F_i = 3 come for free once integrality holds.
divisor_class fano_polarization(const blowup_surface& s,
                                const std::vector<divisor_class>& seq);

// min { H.f : f isotropic, f.K = 0, f primitive, H.f > 0 }, computed over
// a degree box of the given size and re-checked at twice the size.
Int phi_invariant(const blowup_surface& s, const divisor_class& h,
                  const Int& box = 4);

} // namespace coble
