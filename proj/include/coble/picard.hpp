#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coble/lattice.hpp"
#include "coble/rational.hpp"

namespace coble {

// Class d L - m_1 E_1 - ... - m_N E_N on the blow-up of P^2 in N points.
// Effectivity is never assumed.
struct divisor_class {
    Int d;
    std::vector<Int> m;

    int n_points() const { return static_cast<int>(m.size()); }
    bool operator==(const divisor_class&) const = default;

    divisor_class operator+(const divisor_class& o) const;
    divisor_class operator-(const divisor_class& o) const;
    divisor_class operator*(const Int& s) const;
    divisor_class operator-() const;
};

struct blowup_surface {
    int n_points;
};

divisor_class line_class(const blowup_surface& s);
divisor_class point_class(const blowup_surface& s, int i); // E_i, 1-based
divisor_class canonical_class(const blowup_surface& s);    // -3L + E_1 + ... + E_N

// Coordinates (d, -m_1, ..., -m_N) identify Pic with Z^{1,N}; the
// canonical class goes to the vector k.
lattice_vector class_to_lattice(const divisor_class& c);
divisor_class lattice_to_class(const lattice_vector& v);

Int intersect(const blowup_surface& s, const divisor_class& a, const divisor_class& b);

// p_a(D) = 1 + (D^2 + D.K)/2; a parity violation means the class is
// invalid, so it raises instead of rounding.
Int arithmetic_genus(const blowup_surface& s, const divisor_class& d);

// chi(D) = 1 + D(D - K)/2
Int euler_characteristic(const blowup_surface& s, const divisor_class& d);

std::string class_str(const divisor_class& c);

struct audit_entry {
    std::string name;
    bool pass;
    std::string lhs;
    std::string rhs;
};

// Checks the intersection-theoretic identities satisfied by the
// quintic model class H = 6L - 2E_1 - ... - 2E_7 - E_8 - E_9 - E_10 on a
// ten-point blow-up.  A different candidate for H can be passed in to see
// which identities it breaks.
std::vector<audit_entry> quintic_model_audit(
    const blowup_surface& s,
    const std::optional<divisor_class>& h_override = std::nullopt);

// Given ten pairwise-orthogonal classes with C_i^2 = -1 and C_i.K = -1,
// returns the isometry of Z^{1,10} taking C_i to e_i and
// L' = (sum C_i - K)/3 to e_0.  It automatically fixes k.
isometry_map contract_basis(const blowup_surface& s,
                            const std::vector<divisor_class>& classes);

} // namespace coble
