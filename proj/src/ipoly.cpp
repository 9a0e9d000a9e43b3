#include "coble/ipoly.hpp"

#include <algorithm>

#include "coble/error.hpp"

namespace coble {

int ip_degree(const ipoly& p) { return static_cast<int>(p.size()) - 1; }

ipoly ip_trim(ipoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ipoly ip_add(const ipoly& a, const ipoly& b) {
    ipoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return ip_trim(std::move(r));
}

ipoly ip_sub(const ipoly& a, const ipoly& b) {
    ipoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return ip_trim(std::move(r));
}

ipoly ip_neg(ipoly a) {
    for (Int& c : a) c = -c;
    return a;
}

ipoly ip_mul(const ipoly& a, const ipoly& b) {
    if (a.empty() || b.empty()) return {};
    ipoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r; // leading product of nonzero leads is nonzero over Z
}

ipoly ip_scale(const ipoly& a, const Int& c) {
    if (c == 0) return {};
    ipoly r = a;
    for (Int& x : r) x *= c;
    return r;
}

bool ip_try_divexact(const ipoly& a, const ipoly& b, ipoly& q) {
    require(!b.empty(), "BadInput", "polynomial division by zero");
    if (a.empty()) {
        q.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    ipoly rem = a;
    ipoly quot(a.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    for (size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return false;
        Int c = top / lead;
        quot[k] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    for (const Int& c : rem)
        if (c != 0) return false;
    q = ip_trim(std::move(quot));
    return true;
}

ipoly ip_divexact(const ipoly& a, const ipoly& b) {
    ipoly q;
    require(ip_try_divexact(a, b, q), "BadInput", "inexact polynomial division");
    return q;
}

Int ip_content(const ipoly& a) {
    Int g = 0;
    for (const Int& c : a) g = gcd(g, c);
    return g;
}

ipoly ip_primitive(const ipoly& a) {
    if (a.empty()) return {};
    Int g = ip_content(a);
    if (a.back() < 0) g = -g;
    ipoly r = a;
    for (Int& c : r) c /= g;
    return r;
}

ipoly ip_derivative(const ipoly& a) {
    if (a.size() <= 1) return {};
    ipoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(i);
    return ip_trim(std::move(r));
}

namespace {

// pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b
ipoly pseudo_rem(ipoly a, const ipoly& b) {
    const Int& lead = b.back();
    while (a.size() >= b.size()) {
        Int c = a.back();
        size_t shift = a.size() - b.size();
        for (Int& x : a) x *= lead;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        a = ip_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

} // namespace

ipoly ip_gcd(ipoly a, ipoly b) {
    a = ip_primitive(a);
    b = ip_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ipoly r = ip_primitive(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace coble
