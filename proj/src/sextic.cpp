#include "coble/sextic.hpp"

#include <algorithm>

#include "coble/error.hpp"
#include "coble/parallel.hpp"

namespace coble {

namespace {

bool term_before(const plane_term& a, const plane_term& b) {
    return a.e > b.e;
}

} // namespace

plane_form::plane_form(int degree, std::vector<plane_term> terms)
    : deg_(degree), terms_(std::move(terms)) {
    require(degree >= 0, "BadInput", "negative degree");
    for (const auto& t : terms_) {
        require(t.e[0] >= 0 && t.e[1] >= 0 && t.e[2] >= 0 &&
                    t.e[0] + t.e[1] + t.e[2] == degree,
                "BadInput", "exponent triple does not match the degree");
    }
    std::erase_if(terms_, [](const plane_term& t) { return t.c == 0; });
    std::sort(terms_.begin(), terms_.end(), term_before);
    for (size_t i = 1; i < terms_.size(); ++i)
        require(terms_[i - 1].e != terms_[i].e, "BadInput",
                "duplicate exponent triple");
}

std::vector<std::array<int, 3>> monomial_basis(int m) {
    require(m >= 0, "BadInput", "negative degree");
    std::vector<std::array<int, 3>> out;
    for (int i = m; i >= 0; --i)
        for (int j = m - i; j >= 0; --j) out.push_back({i, j, m - i - j});
    return out;
}

sextic_parametrization make_parametrization(const binary_form& f0,
                                            const binary_form& f1,
                                            const binary_form& f2) {
    const binary_form* fs[3] = {&f0, &f1, &f2};
    for (const auto* f : fs)
        require(f->degree() == 6, "BadInput",
                "a sextic parametrization needs three degree-6 forms");
    qmat coeffs(3, 7);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 7; ++j) coeffs(i, j) = (*fs[i])[j];
    require(rank(coeffs) == 3, "DependentForms",
            "the three forms are linearly dependent");
    require(gcd_form(gcd_form(f0, f1), f2).degree() == 0, "BasePoint",
            "the three forms share a projective root");
    return sextic_parametrization{f0, f1, f2, std::nullopt};
}

sextic_parametrization build_parametrization(const binary_form& a,
                                             const binary_form& b,
                                             const binary_form& c,
                                             const qmat& lambda) {
    const char* names[3] = {"A", "B", "C"};
    const binary_form* qs[3] = {&a, &b, &c};
    for (size_t i = 0; i < 3; ++i) {
        require(qs[i]->degree() == 2, "BadInput",
                std::string(names[i]) + " must be a quadratic form");
        require(!qs[i]->is_zero(), "DegenerateInput",
                std::string(names[i]) + " is zero");
        const binary_form& q = *qs[i];
        require(q[1] * q[1] - Rat(4) * q[0] * q[2] != 0, "DegenerateInput",
                std::string(names[i]) + " has a double root");
    }
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            require(resultant(*qs[i], *qs[j]) != 0, "DegenerateInput",
                    std::string(names[i]) + " and " + names[j] + " share a root");
    require(lambda.rows() == 3 && lambda.cols() == 3, "BadInput",
            "lambda must be a 3x3 matrix");
    require(det(lambda) != 0, "DegenerateInput", "lambda is singular");

    auto row_combo = [&](size_t r) {
        return a * lambda(r, 0) + b * lambda(r, 1) + c * lambda(r, 2);
    };
    binary_form g0 = row_combo(0), g1 = row_combo(1), g2 = row_combo(2);
    sextic_parametrization p = make_parametrization(b * c * g0, a * c * g1, a * b * g2);
    p.witness = parametrization_witness{a, b, c, g0, g1, g2, lambda};
    return p;
}

namespace {

std::vector<binary_form> form_powers(const binary_form& f, int maxp) {
    std::vector<binary_form> p{binary_form(0, {Rat(1)})};
    for (int i = 1; i <= maxp; ++i) p.push_back(p.back() * f);
    return p;
}

} // namespace

binary_form pullback(const plane_form& d, const sextic_parametrization& g) {
    int m = d.degree();
    binary_form acc = binary_form::zero(6 * m);
    for (const auto& t : d.terms()) {
        binary_form prod(0, {t.c});
        for (int p = 0; p < t.e[0]; ++p) prod = prod * g.f0;
        for (int p = 0; p < t.e[1]; ++p) prod = prod * g.f1;
        for (int p = 0; p < t.e[2]; ++p) prod = prod * g.f2;
        acc = acc + prod;
    }
    return acc;
}

namespace {

// multiplication by s0 keeps coefficient indices (index = s1 exponent)
binary_form mul_s0(const binary_form& f) {
    std::vector<Rat> c = f.coeffs();
    c.push_back(Rat(0));
    return binary_form(f.degree() + 1, std::move(c));
}

binary_form div_s1(const binary_form& f) {
    require(f[0] == 0, "InternalError", "inexact division by s1");
    std::vector<Rat> c(f.coeffs().begin() + 1, f.coeffs().end());
    return binary_form(f.degree() - 1, std::move(c));
}

// Q(s;t) = (F(s)G(t) - F(t)G(s)) / (s0 t1 - s1 t0), stored by t-coefficient:
// index a carries t0^(5-a) t1^a and holds a degree-5 form in s.
std::array<binary_form, 6> divided_difference(const binary_form& f,
                                              const binary_form& g) {
    std::array<binary_form, 7> p;
    for (size_t a = 0; a <= 6; ++a) p[a] = f * g[a] - g * f[a];
    std::array<binary_form, 6> q;
    q[0] = div_s1(-p[0]);
    for (size_t a = 1; a <= 5; ++a) q[a] = div_s1(mul_s0(q[a - 1]) - p[a]);
    require(mul_s0(q[5]) == p[6], "InternalError",
            "divided difference failed to divide out the diagonal");
    return q;
}

// joint denominator-clearing and dehomogenization at s0 = 1; polynomial
// index = s1 exponent
std::array<ipoly, 6> clear_tpoly(const std::array<binary_form, 6>& q) {
    Int denom = 1;
    for (const auto& f : q)
        for (const Rat& x : f.coeffs()) denom = lcm(denom, den(x));
    std::array<ipoly, 6> out;
    for (size_t a = 0; a < 6; ++a) {
        ipoly p(q[a].coeffs().size());
        for (size_t j = 0; j < p.size(); ++j)
            p[j] = num(q[a][j]) * (denom / den(q[a][j]));
        out[a] = ip_trim(std::move(p));
    }
    return out;
}

ipoly det_bareiss(std::vector<std::vector<ipoly>> m) {
    size_t n = m.size();
    ipoly prev{Int(1)};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].empty()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = ip_divexact(
                    ip_sub(ip_mul(m[k][k], m[i][j]), ip_mul(m[i][k], m[k][j])),
                    prev);
        prev = m[k][k];
    }
    return sign < 0 ? ip_neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// formal resultant in t of two declared-degree-5 t-polynomials; vanishing
// t-leads are legitimate (they encode roots at [1:0]) and the formal
// Sylvester determinant is exactly the homogeneous resultant
ipoly resultant_t(const std::array<ipoly, 6>& qa, const std::array<ipoly, 6>& qb) {
    std::vector<std::vector<ipoly>> syl(10, std::vector<ipoly>(10));
    for (size_t r = 0; r < 5; ++r)
        for (size_t i = 0; i < 6; ++i) syl[r][r + i] = qa[i];
    for (size_t r = 0; r < 5; ++r)
        for (size_t i = 0; i < 6; ++i) syl[5 + r][r + i] = qb[i];
    return det_bareiss(std::move(syl));
}

} // namespace

binary_form double_point_form(const sextic_parametrization& g) {
    auto q01 = clear_tpoly(divided_difference(g.f0, g.f1));
    auto q02 = clear_tpoly(divided_difference(g.f0, g.f2));
    auto q12 = clear_tpoly(divided_difference(g.f1, g.f2));

    std::vector<std::array<const std::array<ipoly, 6>*, 2>> pairs{
        {&q01, &q02}, {&q01, &q12}, {&q02, &q12}};
    std::vector<ipoly> res = parallel_map_ranges<ipoly>(
        pairs.size(), [&](size_t begin, size_t end) {
            std::vector<ipoly> local;
            for (size_t i = begin; i < end; ++i)
                local.push_back(resultant_t(*pairs[i][0], *pairs[i][1]));
            return local;
        });

    ipoly core;
    int val_s0 = -1;
    for (const ipoly& r : res) {
        if (r.empty()) continue;
        core = ip_gcd(core, r);
        int e = 50 - ip_degree(r);
        if (val_s0 < 0 || e < val_s0) val_s0 = e;
    }
    require(!core.empty(), "NotTenNodal",
            "all pairwise resultants vanish; the map is not birational onto "
            "a plane sextic");
    int w_degree = val_s0 + ip_degree(core);
    require(w_degree == 20, "NotTenNodal",
            "the double-point form has degree " + std::to_string(w_degree) +
                " instead of 20; the image is not a 10-nodal sextic");
    std::vector<Rat> c(21, Rat(0));
    for (size_t j = 0; j < core.size(); ++j) c[j] = Rat(core[j]);
    return normalize_form(binary_form(20, std::move(c)));
}

namespace {

// Coefficients of P in positions that decide divisibility by M: the first
// beta and last alpha coefficients verbatim, plus the remainder of the
// middle slice modulo the two-sided-stripped core of M.  The kernel of
// P -> remainder_profile(P, M) is exactly { P : M | P }.
std::vector<Rat> remainder_profile(const binary_form& p, const binary_form& m) {
    int beta = v_valuation(m), alpha = u_valuation(m);
    int dm = m.degree() - alpha - beta;
    std::vector<Rat> mstar(static_cast<size_t>(dm) + 1);
    for (int j = 0; j <= dm; ++j)
        mstar[static_cast<size_t>(j)] = m[static_cast<size_t>(beta + j)];

    int n = p.degree();
    std::vector<Rat> out;
    for (int i = 0; i < beta && i <= n; ++i)
        out.push_back(p[static_cast<size_t>(i)]);
    for (int i = std::max(n - alpha + 1, 0); i <= n; ++i)
        out.push_back(p[static_cast<size_t>(i)]);
    std::vector<Rat> mid;
    for (int i = beta; i <= n - alpha; ++i) mid.push_back(p[static_cast<size_t>(i)]);
    for (size_t top = mid.size(); top-- > static_cast<size_t>(dm);) {
        Rat f = mid[top] / mstar[static_cast<size_t>(dm)];
        if (f == 0) continue;
        for (int j = 0; j <= dm; ++j)
            mid[top - static_cast<size_t>(dm) + static_cast<size_t>(j)] -=
                f * mstar[static_cast<size_t>(j)];
    }
    for (size_t i = 0; i < std::min(mid.size(), static_cast<size_t>(dm)); ++i)
        out.push_back(mid[i]);
    return out;
}

std::vector<binary_form> monomial_pullbacks(const sextic_parametrization& g,
                                            int m) {
    auto p0 = form_powers(g.f0, m), p1 = form_powers(g.f1, m),
         p2 = form_powers(g.f2, m);
    std::vector<binary_form> out;
    for (const auto& e : monomial_basis(m))
        out.push_back(p0[static_cast<size_t>(e[0])] *
                      p1[static_cast<size_t>(e[1])] *
                      p2[static_cast<size_t>(e[2])]);
    return out;
}

std::vector<std::vector<Rat>> divisibility_kernel(
    const sextic_parametrization& g, int m, const binary_form* modulus) {
    std::vector<binary_form> cols = monomial_pullbacks(g, m);
    std::vector<std::vector<Rat>> profiles;
    for (const auto& p : cols)
        profiles.push_back(modulus ? remainder_profile(p, *modulus)
                                   : p.coeffs());
    qmat a(profiles.front().size(), profiles.size());
    for (size_t j = 0; j < profiles.size(); ++j)
        for (size_t i = 0; i < profiles[j].size(); ++i) a(i, j) = profiles[j][i];
    return kernel_basis(a);
}

} // namespace

int nodal_system_dimension(const sextic_parametrization& g, int m, int r) {
    require(m >= 1, "BadInput", "the degree must be positive");
    require(r == 1 || r == 2, "BadInput", "the multiplicity must be 1 or 2");
    if (6 * m < 20 * r)
        return static_cast<int>(divisibility_kernel(g, m, nullptr).size());
    binary_form w = double_point_form(g);
    binary_form modulus = (r == 2) ? w * w : w;
    return static_cast<int>(divisibility_kernel(g, m, &modulus).size());
}

plane_form implicitize(const sextic_parametrization& g) {
    std::vector<std::vector<Rat>> kernel = divisibility_kernel(g, 6, nullptr);
    require(kernel.size() == 1, "NonBirational",
            "the sextic pullback kernel has dimension " +
                std::to_string(kernel.size()) + " instead of 1");
    std::vector<Rat>& v = kernel.front();
    Int denom = 1;
    for (const Rat& x : v) denom = lcm(denom, den(x));
    Int content = 0;
    for (const Rat& x : v) content = gcd(content, Int(num(x) * (denom / den(x))));
    Rat scale(denom, content);
    scale.canonicalize();
    for (Rat& x : v) x *= scale;
    for (const Rat& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Rat& y : v) y = -y;
        break;
    }
    auto basis = monomial_basis(6);
    std::vector<plane_term> terms;
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) terms.push_back(plane_term{basis[i], v[i]});
    plane_form out(6, std::move(terms));
    require(pullback(out, g).is_zero(), "InternalError",
            "implicit equation does not pull back to zero");
    return out;
}

coble_report coble_check(const sextic_parametrization& g) {
    coble_report rep;
    auto note = [&rep](const std::string& code) {
        if (rep.reason.empty()) rep.reason = code;
    };

    try {
        binary_form w = double_point_form(g);
        rep.w_ok = true;
        rep.w_degree = w.degree();
        rep.w_square_free = is_square_free(w);
        if (g.witness) {
            const auto& wit = *g.witness;
            rep.witness_factors_divide_w = form_divides(wit.a, w) &&
                                           form_divides(wit.b, w) &&
                                           form_divides(wit.c, w);
        }
    } catch (const error& e) {
        note(e.code());
    }

    try {
        rep.dim_cubics_through_nodes = nodal_system_dimension(g, 3, 1);
        if (rep.dim_cubics_through_nodes != 0) note("cubic_through_all_nodes");
    } catch (const error& e) {
        note(e.code());
    }
    try {
        rep.dim_double_sextics = nodal_system_dimension(g, 6, 2);
        if (rep.dim_double_sextics != 1) note("double_sextic_dim_not_one");
    } catch (const error& e) {
        note(e.code());
    }
    try {
        rep.implicit = implicitize(g);
        rep.implicit_ok = true;
    } catch (const error& e) {
        note(e.code());
    }

    rep.is_coble = rep.w_ok && rep.dim_cubics_through_nodes == 0 &&
                   rep.dim_double_sextics == 1 && rep.implicit_ok;
    return rep;
}

} // namespace coble
