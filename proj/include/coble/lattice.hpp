#pragma once

#include <array>
#include <vector>

#include "coble/linalg.hpp"
#include "coble/rational.hpp"

namespace coble {

// Hard cap on the number of blown-up points; everything in this project
// needs far less, but enumeration cost explodes with the rank.
inline constexpr int kMaxRank = 64;

// Vector in Z^{1,N} with the standard basis e_0, ..., e_N and pairing
// diag(+1, -1, ..., -1).
class lattice_vector {
public:
    explicit lattice_vector(int n) : c_(static_cast<size_t>(n) + 1, Int(0)) {}
    explicit lattice_vector(std::vector<Int> coords) : c_(std::move(coords)) {}

    int rank_param() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coords() const { return c_; }
    Int& operator[](size_t i) { return c_[i]; }
    const Int& operator[](size_t i) const { return c_[i]; }

    bool operator==(const lattice_vector&) const = default;

    lattice_vector operator+(const lattice_vector& o) const;
    lattice_vector operator-(const lattice_vector& o) const;
    lattice_vector operator*(const Int& s) const;
    lattice_vector operator-() const;

private:
    std::vector<Int> c_;
};

// basis vector e_i
lattice_vector basis_vector(int n, int i);
// k = -3 e_0 + e_1 + ... + e_N
lattice_vector k_vector(int n);

Int pair(const lattice_vector& x, const lattice_vector& y);

// Vector in the E10 lattice, written in the root basis a_0, ..., a_9 with
// a_0 = e_0 - e_1 - e_2 - e_3 and a_i = e_i - e_{i+1} for 1 <= i <= 9.
class e10_vector {
public:
    e10_vector() : c_{} {}
    explicit e10_vector(std::array<Int, 10> coords) : c_(std::move(coords)) {}

    const std::array<Int, 10>& root_coords() const { return c_; }
    Int& operator[](size_t i) { return c_[i]; }
    const Int& operator[](size_t i) const { return c_[i]; }

    bool operator==(const e10_vector&) const = default;

private:
    std::array<Int, 10> c_;
};

// simple root a_i as a vector in Z^{1,10}
lattice_vector root_basis_vector(int i);

lattice_vector embed(const e10_vector& w);
// inverse of embed; requires the input to lie in k-perp
e10_vector to_root_basis(const lattice_vector& w);

// 10x10 Gram matrix of the root basis computed from the embedding
imat root_gram_matrix();

// Decomposition along Z^{1,10} = k-perp (+) Z k: v = perp + c k with
// perp . k = 0, computed as perp = v + (v . k) k.
struct k_split {
    lattice_vector perp;
    Int k_coefficient;
};
k_split split_along_k(const lattice_vector& v);

// rho_alpha(x) = x + (x . alpha) alpha; alpha must satisfy alpha^2 = -2
lattice_vector reflect(const lattice_vector& alpha, const lattice_vector& x);

// Isometry candidate of Z^{1,N}, acting on coordinate columns.
struct isometry_map {
    imat m;

    lattice_vector apply(const lattice_vector& x) const;
    bool operator==(const isometry_map&) const = default;
};

bool is_isometry(const isometry_map& f);

// matrix of rho_alpha in the standard basis
isometry_map reflection_matrix(const lattice_vector& alpha);

} // namespace coble
