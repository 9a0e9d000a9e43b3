#pragma once

#include <vector>

#include "coble/rational.hpp"

namespace coble {

// Dense univariate polynomial over Z, coefficient of x^i at index i.
// Invariant: no trailing zero coefficients; the zero polynomial is {}.
using ipoly = std::vector<Int>;

int ip_degree(const ipoly& p); // -1 for zero
ipoly ip_trim(ipoly p);

ipoly ip_add(const ipoly& a, const ipoly& b);
ipoly ip_sub(const ipoly& a, const ipoly& b);
ipoly ip_neg(ipoly a);
ipoly ip_mul(const ipoly& a, const ipoly& b);
ipoly ip_scale(const ipoly& a, const Int& c);

// Quotient of an exact division; fails loudly on inexactness.
ipoly ip_divexact(const ipoly& a, const ipoly& b);
// true iff b divides a over Z; quotient stored in q on success
bool ip_try_divexact(const ipoly& a, const ipoly& b, ipoly& q);

Int ip_content(const ipoly& a);
// content 1, leading coefficient positive; zero stays zero
ipoly ip_primitive(const ipoly& a);

ipoly ip_derivative(const ipoly& a);

// primitive gcd (primitive pseudo-remainder sequence)
ipoly ip_gcd(ipoly a, ipoly b);

} // namespace coble
