#include "coble/lattice.hpp"

#include "coble/error.hpp"

namespace coble {

namespace {

void check_same_rank(const lattice_vector& x, const lattice_vector& y) {
    require(x.rank_param() == y.rank_param(), "RankMismatch",
            "vectors live in different lattices");
}

void check_rank_range(int n) {
    require(n >= 1 && n <= kMaxRank, "BadInput", "rank parameter out of range");
}

} // namespace

lattice_vector lattice_vector::operator+(const lattice_vector& o) const {
    check_same_rank(*this, o);
    lattice_vector r(rank_param());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return r;
}

lattice_vector lattice_vector::operator-(const lattice_vector& o) const {
    check_same_rank(*this, o);
    lattice_vector r(rank_param());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return r;
}

lattice_vector lattice_vector::operator*(const Int& s) const {
    lattice_vector r(rank_param());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return r;
}

lattice_vector lattice_vector::operator-() const {
    lattice_vector r(rank_param());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return r;
}

lattice_vector basis_vector(int n, int i) {
    check_rank_range(n);
    require(i >= 0 && i <= n, "BadInput", "basis index out of range");
    lattice_vector v(n);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

lattice_vector k_vector(int n) {
    check_rank_range(n);
    lattice_vector v(n);
    v[0] = -3;
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i)] = 1;
    return v;
}

Int pair(const lattice_vector& x, const lattice_vector& y) {
    check_same_rank(x, y);
    Int s = x[0] * y[0];
    for (size_t i = 1; i < x.coords().size(); ++i) s -= x[i] * y[i];
    return s;
}

lattice_vector root_basis_vector(int i) {
    require(i >= 0 && i <= 9, "BadInput", "root index out of range");
    lattice_vector v(10);
    if (i == 0) {
        v[0] = 1;
        v[1] = -1;
        v[2] = -1;
        v[3] = -1;
    } else {
        v[static_cast<size_t>(i)] = 1;
        v[static_cast<size_t>(i) + 1] = -1;
    }
    return v;
}

lattice_vector embed(const e10_vector& w) {
    lattice_vector v(10);
    for (int i = 0; i <= 9; ++i) {
        if (w[static_cast<size_t>(i)] == 0) continue;
        v = v + root_basis_vector(i) * w[static_cast<size_t>(i)];
    }
    return v;
}

imat root_gram_matrix() {
    imat g(10, 10);
    for (int i = 0; i <= 9; ++i)
        for (int j = 0; j <= 9; ++j)
            g(static_cast<size_t>(i), static_cast<size_t>(j)) =
                pair(root_basis_vector(i), root_basis_vector(j));
    return g;
}

namespace {

// Inverse of the root Gram matrix; integral because the lattice is
// unimodular.  Computed once.
const imat& root_gram_inverse() {
    static const imat inv = [] {
        auto qinv = inverse(to_qmat(root_gram_matrix()));
        require(qinv.has_value(), "InternalError", "root gram matrix singular");
        return to_imat(*qinv);
    }();
    return inv;
}

} // namespace

e10_vector to_root_basis(const lattice_vector& w) {
    require(w.rank_param() == 10, "RankMismatch",
            "root coordinates only exist in Z^{1,10}");
    require(pair(w, k_vector(10)) == 0, "BadInput",
            "vector does not lie in the k-perp sublattice");
    std::vector<Int> rhs(10);
    for (int j = 0; j <= 9; ++j)
        rhs[static_cast<size_t>(j)] = pair(w, root_basis_vector(j));
    const imat& gi = root_gram_inverse();
    std::array<Int, 10> coords{};
    for (size_t i = 0; i < 10; ++i) {
        Int s = 0;
        for (size_t j = 0; j < 10; ++j) s += gi(i, j) * rhs[j];
        coords[i] = s;
    }
    e10_vector out(coords);
    require(embed(out) == w, "InternalError", "root coordinate round trip failed");
    return out;
}

k_split split_along_k(const lattice_vector& v) {
    require(v.rank_param() == 10, "RankMismatch",
            "k-splitting only applies in Z^{1,10}");
    lattice_vector k = k_vector(10);
    Int vk = pair(v, k);
    k_split s{v + k * vk, -vk};
    return s;
}

lattice_vector reflect(const lattice_vector& alpha, const lattice_vector& x) {
    check_same_rank(alpha, x);
    require(pair(alpha, alpha) == -2, "NotARoot",
            "reflection requires a vector of square -2");
    return x + alpha * pair(x, alpha);
}

lattice_vector isometry_map::apply(const lattice_vector& x) const {
    require(m.rows() == x.coords().size() && m.cols() == x.coords().size(),
            "RankMismatch", "matrix size does not match vector length");
    std::vector<Int> out(m.rows(), Int(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * x[j];
    return lattice_vector(std::move(out));
}

bool is_isometry(const isometry_map& f) {
    if (f.m.rows() != f.m.cols() || f.m.rows() == 0) return false;
    size_t n = f.m.rows();
    // J = diag(1, -1, ..., -1).  Check M^T J M = J entrywise.
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Int s = f.m(0, i) * f.m(0, j);
            for (size_t r = 1; r < n; ++r) s -= f.m(r, i) * f.m(r, j);
            Int expect = 0;
            if (i == j) expect = (i == 0) ? 1 : -1;
            if (s != expect) return false;
        }
    }
    return true;
}

isometry_map reflection_matrix(const lattice_vector& alpha) {
    int n = alpha.rank_param();
    size_t sz = static_cast<size_t>(n) + 1;
    imat m(sz, sz);
    for (int j = 0; j <= n; ++j) {
        lattice_vector img = reflect(alpha, basis_vector(n, j));
        for (size_t i = 0; i < sz; ++i) m(i, static_cast<size_t>(j)) = img[i];
    }
    return isometry_map{std::move(m)};
}

} // namespace coble
