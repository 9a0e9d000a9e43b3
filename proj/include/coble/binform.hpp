#pragma once

#include <vector>

#include "coble/ipoly.hpp"
#include "coble/rational.hpp"

namespace coble {

// Homogeneous form of declared degree n in (u, v); coeffs[i] multiplies
// u^(n-i) v^i.  The lead may vanish: a degree-6 form with coeffs[0] = 0 has
// a root at [1:0].
class binary_form {
public:
    binary_form() : deg_(0), c_(1, Rat(0)) {}
    binary_form(int degree, std::vector<Rat> coeffs);

    static binary_form zero(int degree);

    int degree() const { return deg_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    bool is_zero() const;

    bool operator==(const binary_form&) const = default;

    binary_form operator+(const binary_form& o) const;
    binary_form operator-(const binary_form& o) const;
    binary_form operator*(const binary_form& o) const;
    binary_form operator*(const Rat& s) const;
    binary_form operator-() const;

private:
    int deg_;
    std::vector<Rat> c_;
};

binary_form derivative_u(const binary_form& f);
binary_form derivative_v(const binary_form& f);

Rat evaluate(const binary_form& f, const Rat& u, const Rat& v);

// index of the first nonzero coefficient, i.e. the multiplicity of the
// root at [1:0]; degree+1 for the zero form
int v_valuation(const binary_form& f);
// multiplicity of the root at [0:1]
int u_valuation(const binary_form& f);

// true when g = lambda f for some nonzero rational lambda (degrees equal)
bool proportional(const binary_form& f, const binary_form& g);

// integer coefficients, content one, first nonzero coefficient positive
binary_form normalize_form(const binary_form& f);

// Sylvester determinant; zero exactly when the forms share a projective root.
Rat resultant(const binary_form& f, const binary_form& g);

// primitive gcd, first nonzero coefficient positive; roots at [1:0] and
// [0:1] are accounted for through the valuations
binary_form gcd_form(const binary_form& f, const binary_form& g);

bool is_square_free(const binary_form& f);

// true when f = d q for some form q of degree deg f - deg d
bool form_divides(const binary_form& d, const binary_form& f);

// J(F, G) = F_u G_v - F_v G_u
binary_form jacobian(const binary_form& f, const binary_form& g);

// Fractional-linear map of P^1, stored with integer entries, content one
// and first nonzero entry positive, so projectively equal maps compare
// equal.  The determinant is required to be nonzero.
struct mobius_map {
    Rat a, b, c, d;

    bool operator==(const mobius_map&) const = default;
};

mobius_map make_mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

Rat mobius_det(const mobius_map& t);
bool is_scalar(const mobius_map& t);
// non-scalar with vanishing trace
bool is_involution(const mobius_map& t);

mobius_map compose(const mobius_map& s, const mobius_map& t);

// f(au + bv, cu + dv)
binary_form substitute(const binary_form& f, const mobius_map& t);

// quadratic whose roots are the fixed points: -c u^2 + (a-d) uv + b v^2
binary_form fixed_form(const mobius_map& t);

// The involution swapping the two roots of every member of the pencil
// spanned by two quadratics; its fixed points are the roots of the
// Jacobian.  Refuses pencils with a base point and pencils whose Jacobian
// has a double root (there the two fixed points collide and no involution
// is defined).
mobius_map pencil_involution(const binary_form& f, const binary_form& g);

} // namespace coble
