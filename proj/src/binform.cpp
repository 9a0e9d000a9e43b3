#include "coble/binform.hpp"

#include <algorithm>

#include "coble/error.hpp"
#include "coble/linalg.hpp"

namespace coble {

namespace {

void check_same_degree(const binary_form& a, const binary_form& b) {
    require(a.degree() == b.degree(), "DegreeMismatch",
            "forms have different declared degrees");
}

// clear denominators and take the integer primitive part; zero maps to the
// empty polynomial
ipoly ipoly_from_rats(const std::vector<Rat>& c, size_t begin, size_t end) {
    Int denom = 1;
    for (size_t i = begin; i < end; ++i) denom = lcm(denom, den(c[i]));
    ipoly p(end - begin);
    for (size_t i = begin; i < end; ++i)
        p[i - begin] = num(c[i]) * (denom / den(c[i]));
    return ip_primitive(p);
}

} // namespace

binary_form::binary_form(int degree, std::vector<Rat> coeffs)
    : deg_(degree), c_(std::move(coeffs)) {
    require(degree >= 0, "BadInput", "negative degree");
    require(c_.size() == static_cast<size_t>(degree) + 1, "BadInput",
            "a form of degree n needs exactly n+1 coefficients");
}

binary_form binary_form::zero(int degree) {
    require(degree >= 0, "BadInput", "negative degree");
    return binary_form(degree, std::vector<Rat>(static_cast<size_t>(degree) + 1, Rat(0)));
}

bool binary_form::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

binary_form binary_form::operator+(const binary_form& o) const {
    check_same_degree(*this, o);
    binary_form r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

binary_form binary_form::operator-(const binary_form& o) const {
    check_same_degree(*this, o);
    binary_form r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

binary_form binary_form::operator*(const binary_form& o) const {
    binary_form r = zero(deg_ + o.deg_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

binary_form binary_form::operator*(const Rat& s) const {
    binary_form r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

binary_form binary_form::operator-() const { return *this * Rat(-1); }

binary_form derivative_u(const binary_form& f) {
    require(f.degree() >= 1, "PreconditionFailed",
            "derivatives need positive degree");
    int n = f.degree();
    std::vector<Rat> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * Rat(n - i);
    return binary_form(n - 1, std::move(c));
}

binary_form derivative_v(const binary_form& f) {
    require(f.degree() >= 1, "PreconditionFailed",
            "derivatives need positive degree");
    int n = f.degree();
    std::vector<Rat> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = f[static_cast<size_t>(i) + 1] * Rat(i + 1);
    return binary_form(n - 1, std::move(c));
}

Rat evaluate(const binary_form& f, const Rat& u, const Rat& v) {
    // Horner in v/u direction does not apply cleanly with two variables;
    // powers are cheap at these degrees.
    Rat acc = 0;
    Rat upow = 1;
    std::vector<Rat> up(f.coeffs().size());
    for (size_t i = 0; i < up.size(); ++i) {
        up[i] = upow;
        upow *= u;
    }
    Rat vpow = 1;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        acc += f[i] * up[f.coeffs().size() - 1 - i] * vpow;
        vpow *= v;
    }
    return acc;
}

int v_valuation(const binary_form& f) {
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        if (f[i] != 0) return static_cast<int>(i);
    return f.degree() + 1;
}

int u_valuation(const binary_form& f) {
    for (size_t i = f.coeffs().size(); i-- > 0;)
        if (f[i] != 0) return f.degree() - static_cast<int>(i);
    return f.degree() + 1;
}

bool proportional(const binary_form& f, const binary_form& g) {
    if (f.degree() != g.degree()) return false;
    bool fz = f.is_zero(), gz = g.is_zero();
    if (fz || gz) return fz && gz;
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (size_t j = i + 1; j < f.coeffs().size(); ++j)
            if (f[i] * g[j] != f[j] * g[i]) return false;
    return true;
}

binary_form normalize_form(const binary_form& f) {
    if (f.is_zero()) return f;
    Int denom = 1;
    for (const Rat& x : f.coeffs()) denom = lcm(denom, den(x));
    Int content = 0;
    for (const Rat& x : f.coeffs()) content = gcd(content, Int(num(x) * (denom / den(x))));
    Rat scale(denom, content);
    scale.canonicalize();
    binary_form r = f * scale;
    if (r[static_cast<size_t>(v_valuation(r))] < 0) r = -r;
    return r;
}

Rat resultant(const binary_form& f, const binary_form& g) {
    int m = f.degree(), n = g.degree();
    require(m >= 1 && n >= 1, "PreconditionFailed",
            "the resultant needs positive degrees");
    size_t size = static_cast<size_t>(m + n);
    qmat syl(size, size);
    for (size_t r = 0; r < static_cast<size_t>(n); ++r)
        for (size_t i = 0; i <= static_cast<size_t>(m); ++i)
            syl(r, r + i) = f[i];
    for (size_t r = 0; r < static_cast<size_t>(m); ++r)
        for (size_t i = 0; i <= static_cast<size_t>(n); ++i)
            syl(static_cast<size_t>(n) + r, r + i) = g[i];
    return det(syl);
}

binary_form gcd_form(const binary_form& f, const binary_form& g) {
    if (f.is_zero() && g.is_zero()) return binary_form::zero(0);
    if (f.is_zero()) return normalize_form(g);
    if (g.is_zero()) return normalize_form(f);
    int bf = v_valuation(f), af = u_valuation(f);
    int bg = v_valuation(g), ag = u_valuation(g);
    ipoly pf = ipoly_from_rats(f.coeffs(), static_cast<size_t>(bf),
                               f.coeffs().size() - static_cast<size_t>(af));
    ipoly pg = ipoly_from_rats(g.coeffs(), static_cast<size_t>(bg),
                               g.coeffs().size() - static_cast<size_t>(ag));
    ipoly core = ip_gcd(pf, pg);
    int dv = std::min(bf, bg), du = std::min(af, ag);
    int deg = ip_degree(core) + du + dv;
    std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
    for (size_t j = 0; j < core.size(); ++j)
        c[static_cast<size_t>(dv) + j] = Rat(core[j]);
    binary_form out(deg, std::move(c));
    if (out[static_cast<size_t>(v_valuation(out))] < 0) out = -out;
    return out;
}

bool is_square_free(const binary_form& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd_form(derivative_u(f), derivative_v(f)).degree() == 0;
}

bool form_divides(const binary_form& d, const binary_form& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (u_valuation(f) < u_valuation(d)) return false;
    // dehomogenized at u = 1 (index = v exponent), trimmed to true degree
    auto poly = [](const binary_form& g) {
        std::vector<Rat> p(g.coeffs());
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    };
    std::vector<Rat> pf = poly(f), pd = poly(d);
    if (pf.size() < pd.size()) return false;
    for (size_t top = pf.size(); top-- >= pd.size();) {
        Rat q = pf[top] / pd.back();
        if (q == 0) continue;
        for (size_t j = 0; j < pd.size(); ++j)
            pf[top + 1 - pd.size() + j] -= q * pd[j];
    }
    return std::all_of(pf.begin(), pf.end(), [](const Rat& x) { return x == 0; });
}

binary_form jacobian(const binary_form& f, const binary_form& g) {
    return derivative_u(f) * derivative_v(g) - derivative_v(f) * derivative_u(g);
}

mobius_map make_mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    require(a * d - b * c != 0, "BadInput",
            "a fractional-linear map needs a nonzero determinant");
    std::vector<Rat> e{a, b, c, d};
    Int denom = 1;
    for (const Rat& x : e) denom = lcm(denom, den(x));
    Int content = 0;
    for (const Rat& x : e) content = gcd(content, Int(num(x) * (denom / den(x))));
    Rat scale(denom, content);
    scale.canonicalize();
    for (Rat& x : e) x *= scale;
    for (const Rat& x : e) {
        if (x == 0) continue;
        if (x < 0)
            for (Rat& y : e) y = -y;
        break;
    }
    return mobius_map{e[0], e[1], e[2], e[3]};
}

Rat mobius_det(const mobius_map& t) { return t.a * t.d - t.b * t.c; }

bool is_scalar(const mobius_map& t) {
    return t.b == 0 && t.c == 0 && t.a == t.d;
}

bool is_involution(const mobius_map& t) {
    return !is_scalar(t) && t.a + t.d == 0;
}

mobius_map compose(const mobius_map& s, const mobius_map& t) {
    return make_mobius(s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d,
                       s.c * t.a + s.d * t.c, s.c * t.b + s.d * t.d);
}

binary_form substitute(const binary_form& f, const mobius_map& t) {
    int n = f.degree();
    binary_form un(1, {t.a, t.b});
    binary_form vn(1, {t.c, t.d});
    std::vector<binary_form> up{binary_form(0, {Rat(1)})};
    std::vector<binary_form> vp{binary_form(0, {Rat(1)})};
    for (int i = 1; i <= n; ++i) {
        up.push_back(up.back() * un);
        vp.push_back(vp.back() * vn);
    }
    binary_form acc = binary_form::zero(n);
    for (int i = 0; i <= n; ++i) {
        const Rat& ci = f[static_cast<size_t>(i)];
        if (ci == 0) continue;
        acc = acc + up[static_cast<size_t>(n - i)] * vp[static_cast<size_t>(i)] * ci;
    }
    return acc;
}

binary_form fixed_form(const mobius_map& t) {
    require(!is_scalar(t), "ScalarMap",
            "a scalar map fixes everything; no fixed-point form exists");
    return binary_form(2, {-t.c, t.a - t.d, t.b});
}

mobius_map pencil_involution(const binary_form& f, const binary_form& g) {
    require(f.degree() == 2 && g.degree() == 2, "PreconditionFailed",
            "pencil involutions are defined for pencils of quadratics");
    require(!f.is_zero() && !g.is_zero(), "DegeneratePencil",
            "zero form in the pencil");
    require(resultant(f, g) != 0, "DegeneratePencil",
            "the pencil members share a root");
    binary_form phi = jacobian(f, g);
    Rat disc = phi[1] * phi[1] - Rat(4) * phi[0] * phi[2];
    require(disc != 0, "CoincidentFixedPoints",
            "the Jacobian has a double root; the two fixed points collide");
    mobius_map t =
        make_mobius(-phi[1], Rat(-2) * phi[2], Rat(2) * phi[0], phi[1]);
    require(proportional(substitute(f, t), f) && proportional(substitute(g, t), g),
            "InternalError", "pencil involution failed to stabilize the pencil");
    return t;
}

} // namespace coble
