#include "coble/picard.hpp"

#include <sstream>

#include "coble/error.hpp"

namespace coble {

namespace {

void check_class(const blowup_surface& s, const divisor_class& c) {
    require(c.n_points() == s.n_points, "RankMismatch",
            "multiplicity array length does not match the surface");
}

void check_surface(const blowup_surface& s) {
    require(s.n_points >= 0 && s.n_points <= kMaxRank, "BadInput",
            "number of blown-up points out of range");
}

} // namespace

divisor_class divisor_class::operator+(const divisor_class& o) const {
    require(m.size() == o.m.size(), "RankMismatch", "class sizes differ");
    divisor_class r{d + o.d, m};
    for (size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
}

divisor_class divisor_class::operator-(const divisor_class& o) const {
    require(m.size() == o.m.size(), "RankMismatch", "class sizes differ");
    divisor_class r{d - o.d, m};
    for (size_t i = 0; i < m.size(); ++i) r.m[i] -= o.m[i];
    return r;
}

divisor_class divisor_class::operator*(const Int& s) const {
    divisor_class r{d * s, m};
    for (auto& mi : r.m) mi *= s;
    return r;
}

divisor_class divisor_class::operator-() const {
    divisor_class r{-d, m};
    for (auto& mi : r.m) mi = -mi;
    return r;
}

divisor_class line_class(const blowup_surface& s) {
    check_surface(s);
    return divisor_class{1, std::vector<Int>(static_cast<size_t>(s.n_points), Int(0))};
}

divisor_class point_class(const blowup_surface& s, int i) {
    check_surface(s);
    require(i >= 1 && i <= s.n_points, "BadInput", "point index out of range");
    divisor_class c{0, std::vector<Int>(static_cast<size_t>(s.n_points), Int(0))};
    c.m[static_cast<size_t>(i) - 1] = -1;
    return c;
}

divisor_class canonical_class(const blowup_surface& s) {
    check_surface(s);
    return divisor_class{-3, std::vector<Int>(static_cast<size_t>(s.n_points), Int(-1))};
}

lattice_vector class_to_lattice(const divisor_class& c) {
    std::vector<Int> v(c.m.size() + 1);
    v[0] = c.d;
    for (size_t i = 0; i < c.m.size(); ++i) v[i + 1] = -c.m[i];
    return lattice_vector(std::move(v));
}

divisor_class lattice_to_class(const lattice_vector& v) {
    divisor_class c{v[0], std::vector<Int>(static_cast<size_t>(v.rank_param()))};
    for (size_t i = 0; i < c.m.size(); ++i) c.m[i] = -v[i + 1];
    return c;
}

Int intersect(const blowup_surface& s, const divisor_class& a, const divisor_class& b) {
    check_class(s, a);
    check_class(s, b);
    Int r = a.d * b.d;
    for (size_t i = 0; i < a.m.size(); ++i) r -= a.m[i] * b.m[i];
    return r;
}

Int arithmetic_genus(const blowup_surface& s, const divisor_class& d) {
    divisor_class k = canonical_class(s);
    Int t = intersect(s, d, d) + intersect(s, d, k);
    require(t % 2 == 0, "NonIntegralGenus", "D^2 + D.K is odd for " + class_str(d));
    return 1 + t / 2;
}

Int euler_characteristic(const blowup_surface& s, const divisor_class& d) {
    divisor_class k = canonical_class(s);
    Int t = intersect(s, d, d - k);
    require(t % 2 == 0, "InternalError", "D(D - K) must always be even");
    return 1 + t / 2;
}

std::string class_str(const divisor_class& c) {
    std::ostringstream out;
    out << "(" << int_str(c.d) << ";";
    for (size_t i = 0; i < c.m.size(); ++i)
        out << (i ? "," : " ") << int_str(c.m[i]);
    out << ")";
    return out.str();
}

std::vector<audit_entry> quintic_model_audit(
    const blowup_surface& s, const std::optional<divisor_class>& h_override) {
    require(s.n_points == 10, "PreconditionFailed",
            "the quintic model lives on a ten-point blow-up");

    divisor_class h_default{6, {2, 2, 2, 2, 2, 2, 2, 1, 1, 1}};
    divisor_class h = h_override.value_or(h_default);
    check_class(s, h);
    divisor_class k = canonical_class(s);
    divisor_class h_prime{9, {3, 3, 3, 3, 3, 3, 3, 2, 2, 2}};

    std::vector<audit_entry> report;
    auto add_int = [&report](std::string name, const Int& lhs, const Int& rhs) {
        report.push_back({std::move(name), lhs == rhs, int_str(lhs), int_str(rhs)});
    };
    auto add_class = [&report](std::string name, const divisor_class& lhs,
                               const divisor_class& rhs) {
        report.push_back({std::move(name), lhs == rhs, class_str(lhs), class_str(rhs)});
    };

    add_int("H^2 = 5", intersect(s, h, h), 5);
    for (int i = 8; i <= 10; ++i)
        add_int("H.E" + std::to_string(i) + " = 1",
                intersect(s, h, point_class(s, i)), 1);
    for (int i = 8; i <= 10; ++i)
        add_int("H.(-K+E" + std::to_string(i) + ") = 2",
                intersect(s, h, point_class(s, i) - k), 2);
    add_class("H = -2K + E8 + E9 + E10", h,
              k * Int(-2) + point_class(s, 8) + point_class(s, 9) + point_class(s, 10));
    add_class("H = H' + K", h, h_prime + k);
    add_int("chi(H') = 4", euler_characteristic(s, h_prime), 4);
    add_int("chi(H) = 4 (claimed h0)", euler_characteristic(s, h), 4);
    return report;
}

isometry_map contract_basis(const blowup_surface& s,
                            const std::vector<divisor_class>& classes) {
    require(s.n_points == 10, "PreconditionFailed",
            "blow-down frames are only built over ten points");
    require(classes.size() == 10, "PreconditionFailed",
            "exactly ten classes are needed");
    divisor_class k = canonical_class(s);
    for (size_t i = 0; i < classes.size(); ++i) {
        check_class(s, classes[i]);
        require(intersect(s, classes[i], k) == -1, "NotUnimodularFrame",
                "class " + std::to_string(i + 1) + " does not pair -1 with K");
        for (size_t j = 0; j <= i; ++j) {
            Int want = (i == j) ? -1 : 0;
            require(intersect(s, classes[i], classes[j]) == want, "NotUnimodularFrame",
                    "classes " + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        " have the wrong pairing");
        }
    }

    divisor_class sum{0, std::vector<Int>(10, Int(0))};
    for (const auto& c : classes) sum = sum + c;
    divisor_class diff = sum - k;
    require(diff.d % 3 == 0, "NotUnimodularFrame",
            "candidate line class is not integral");
    divisor_class lprime{diff.d / 3, std::vector<Int>(10)};
    for (size_t i = 0; i < 10; ++i) {
        require(diff.m[i] % 3 == 0, "NotUnimodularFrame",
                "candidate line class is not integral");
        lprime.m[i] = diff.m[i] / 3;
    }
    require(intersect(s, lprime, lprime) == 1, "NotUnimodularFrame",
            "candidate line class has the wrong square");

    // V has columns L', C_1, ..., C_10 in lattice coordinates; its inverse
    // J V^T J carries the frame back to the standard one.
    imat v(11, 11);
    auto put_col = [&v](size_t j, const divisor_class& c) {
        lattice_vector x = class_to_lattice(c);
        for (size_t i = 0; i < 11; ++i) v(i, j) = x[i];
    };
    put_col(0, lprime);
    for (size_t j = 0; j < 10; ++j) put_col(j + 1, classes[j]);
    require(is_isometry(isometry_map{v}), "NotUnimodularFrame",
            "frame does not preserve the intersection form");

    imat u(11, 11);
    for (size_t i = 0; i < 11; ++i)
        for (size_t j = 0; j < 11; ++j) {
            Int x = v(j, i);
            if ((i == 0) != (j == 0)) x = -x;
            u(i, j) = x;
        }
    isometry_map out{std::move(u)};

    for (size_t j = 0; j < 10; ++j)
        require(out.apply(class_to_lattice(classes[j])) == basis_vector(10, static_cast<int>(j) + 1),
                "InternalError", "frame inverse does not contract the classes");
    require(out.apply(class_to_lattice(k)) == k_vector(10), "InternalError",
            "frame inverse moves the canonical vector");
    return out;
}

} // namespace coble
