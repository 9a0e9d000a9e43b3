#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coble/rational.hpp"

namespace coble {

template <typename T>
class matrix {
public:
    matrix() = default;
    matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static matrix identity(size_t n) {
        matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const matrix&) const = default;

    void swap_rows(size_t i, size_t j) {
        for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using imat = matrix<Int>;
using qmat = matrix<Rat>;

imat mul(const imat& a, const imat& b);
qmat mul(const qmat& a, const qmat& b);
imat transpose(const imat& a);

qmat to_qmat(const imat& a);
// fails unless every entry is an integer
imat to_imat(const qmat& a);

// Fraction-free (Bareiss) determinant.
Int det(const imat& a);
Rat det(const qmat& a);

std::optional<qmat> inverse(const qmat& a);

size_t rank(const qmat& a);

// Kernel basis in deterministic form: reduced row echelon with pivots chosen
// left to right, one basis vector per free column in column order, the free
// coordinate set to 1.
std::vector<std::vector<Rat>> kernel_basis(const qmat& a);

// Integer linear system A x = b solved over Z.  When infeasible, a witness
// row u is returned with g = gcd(u*A) failing to divide u*b (g = 0 for a
// rationally infeasible system).
struct integer_solve_result {
    bool feasible = false;
    std::vector<Int> particular;
    std::vector<std::vector<Int>> homogeneous;
    std::vector<Int> witness_lhs; // u*A
    Int witness_rhs;              // u*b
};

integer_solve_result solve_integer(const imat& a, const std::vector<Int>& b);

} // namespace coble
