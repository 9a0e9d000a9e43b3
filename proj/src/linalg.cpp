#include "coble/linalg.hpp"

#include <algorithm>

#include "coble/error.hpp"

namespace coble {

imat mul(const imat& a, const imat& b) {
    require(a.cols() == b.rows(), "RankMismatch", "matrix product shape mismatch");
    imat r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

qmat mul(const qmat& a, const qmat& b) {
    require(a.cols() == b.rows(), "RankMismatch", "matrix product shape mismatch");
    qmat r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

imat transpose(const imat& a) {
    imat r(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

qmat to_qmat(const imat& a) {
    qmat r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

imat to_imat(const qmat& a) {
    imat r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            require(den(a(i, j)) == 1, "BadInput", "matrix entry is not an integer");
            r(i, j) = num(a(i, j));
        }
    return r;
}

Int det(const imat& a) {
    require(a.rows() == a.cols(), "RankMismatch", "determinant of non-square matrix");
    size_t n = a.rows();
    if (n == 0) return 1;
    imat m = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t piv = k;
            for (size_t i = k + 1; i < n && piv == k; ++i)
                if (m(i, k) != 0) piv = i;
            if (piv == k) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(const qmat& a) {
    require(a.rows() == a.cols(), "RankMismatch", "determinant of non-square matrix");
    size_t n = a.rows();
    if (n == 0) return Rat(1);
    imat m(n, n);
    Rat scale(1);
    for (size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (size_t j = 0; j < n; ++j) l = lcm(l, den(a(i, j)));
        scale *= Rat(l);
        for (size_t j = 0; j < n; ++j) {
            Rat v = a(i, j) * Rat(l);
            m(i, j) = num(v);
        }
    }
    return Rat(det(m)) / scale;
}

std::optional<qmat> inverse(const qmat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    size_t n = a.rows();
    qmat m = a;
    qmat inv = qmat::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            m.swap_rows(col, piv);
            inv.swap_rows(col, piv);
        }
        Rat p = m(col, col);
        for (size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

// reduced row echelon; returns pivot columns
std::vector<size_t> rref(qmat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) m.swap_rows(row, piv);
        Rat p = m(row, col);
        for (size_t j = col; j < m.cols(); ++j) m(row, j) /= p;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t rank(const qmat& a) {
    qmat m = a;
    return rref(m).size();
}

std::vector<std::vector<Rat>> kernel_basis(const qmat& a) {
    qmat m = a;
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(a.cols(), Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct smith {
    imat d, u, v; // d = u * a * v with u, v unimodular
    size_t r = 0; // number of nonzero diagonal entries
};

smith smith_form(const imat& a) {
    size_t mrows = a.rows(), ncols = a.cols();
    smith s{a, imat::identity(mrows), imat::identity(ncols), 0};
    imat& d = s.d;
    imat& u = s.u;
    imat& v = s.v;

    auto swap_cols = [&](imat& m, size_t i, size_t j) {
        for (size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
    };

    size_t t = 0;
    while (t < mrows && t < ncols) {
        // smallest nonzero entry of the trailing submatrix as pivot
        size_t pi = t, pj = t;
        Int best = 0;
        for (size_t i = t; i < mrows; ++i)
            for (size_t j = t; j < ncols; ++j) {
                if (d(i, j) == 0) continue;
                Int m = abs(d(i, j));
                if (best == 0 || m < best) {
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < mrows; ++i) {
                if (d(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                for (size_t j = 0; j < ncols; ++j) d(i, j) -= q * d(t, j);
                for (size_t j = 0; j < mrows; ++j) u(i, j) -= q * u(t, j);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < ncols; ++j) {
                if (d(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                for (size_t i = 0; i < mrows; ++i) d(i, j) -= q * d(i, t);
                for (size_t i = 0; i < ncols; ++i) v(i, j) -= q * v(i, t);
                if (d(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }
    s.r = t;
    return s;
}

} // namespace

integer_solve_result solve_integer(const imat& a, const std::vector<Int>& b) {
    require(b.size() == a.rows(), "RankMismatch", "rhs length mismatch");
    smith s = smith_form(a);
    size_t mrows = a.rows(), ncols = a.cols();

    std::vector<Int> ub(mrows, 0);
    for (size_t i = 0; i < mrows; ++i)
        for (size_t j = 0; j < mrows; ++j) ub[i] += s.u(i, j) * b[j];

    integer_solve_result res;
    auto witness = [&](size_t i) {
        res.feasible = false;
        res.witness_lhs.assign(ncols, 0);
        for (size_t j = 0; j < ncols; ++j)
            for (size_t k = 0; k < mrows; ++k) res.witness_lhs[j] += s.u(i, k) * a(k, j);
        res.witness_rhs = ub[i];
    };

    std::vector<Int> y(ncols, 0);
    for (size_t i = 0; i < s.r; ++i) {
        if (ub[i] % s.d(i, i) != 0) {
            witness(i);
            return res;
        }
        y[i] = ub[i] / s.d(i, i);
    }
    for (size_t i = s.r; i < mrows; ++i) {
        if (ub[i] != 0) {
            witness(i);
            return res;
        }
    }

    res.feasible = true;
    res.particular.assign(ncols, 0);
    for (size_t i = 0; i < ncols; ++i)
        for (size_t j = 0; j < ncols; ++j) res.particular[i] += s.v(i, j) * y[j];
    for (size_t j = s.r; j < ncols; ++j) {
        std::vector<Int> h(ncols);
        for (size_t i = 0; i < ncols; ++i) h[i] = s.v(i, j);
        res.homogeneous.push_back(std::move(h));
    }
    return res;
}

} // namespace coble
