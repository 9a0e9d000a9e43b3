#include "coble/rational.hpp"

#include <cctype>

#include "coble/error.hpp"

namespace coble {

std::string int_str(const Int& z) { return z.get_str(); }

std::string rat_str(const Rat& q) { return q.get_str(); }

namespace {

bool digits_only(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int parse_int(const std::string& s) {
    size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (!digits_only(s, start, s.size()))
        fail("BadInput", "not an integer: '" + s + "'");
    return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash));
    std::string qs = s.substr(slash + 1);
    if (!digits_only(qs, 0, qs.size()))
        fail("BadInput", "denominator must be a positive integer: '" + s + "'");
    Int q(qs, 10);
    if (q == 0) fail("BadInput", "zero denominator: '" + s + "'");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

} // namespace coble
