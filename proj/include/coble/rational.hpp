#pragma once

#include <gmpxx.h>

#include <string>

namespace coble {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical decimal form: "-7", "3", "1/2".  Denominators are always
// positive and fractions are in lowest terms.
std::string int_str(const Int& z);
std::string rat_str(const Rat& q);

// Strict parsers for wire input.  parse_rat accepts "p" or "p/q" with a
// positive denominator (non-canonical fractions like "2/4" are reduced);
// anything else is rejected with code BadInput.
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

// floor(sqrt(n)) for n >= 0
inline Int isqrt_floor(const Int& n) { return sqrt(n); }

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

} // namespace coble
