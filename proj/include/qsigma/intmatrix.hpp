#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsigma/ints.hpp"

namespace qsigma {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool is_zero() const;

    /// Exact determinant (square matrices), Bareiss fraction-free elimination.
    Int determinant() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row[i] += c * row[j]
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Row-style Hermite normal form: H = U * M with U unimodular, pivots
/// positive, entries above each pivot reduced into [0, pivot).
struct HnfDecomposition {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
    std::size_t rank() const { return pivot_cols.size(); }
};
HnfDecomposition hermite_normal_form(const IntMatrix& m);

/// U * M * V = S, S diagonal with nonnegative entries and the divisibility
/// chain S[i][i] | S[i+1][i+1]; U, V unimodular.
struct SnfDecomposition {
    IntMatrix u, s, v;
};
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Basis of ker(M) over Z (primitive, Hermite-reduced rows). Empty when the
/// kernel is trivial.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

/// An integer row lattice in canonical (HNF) form, with membership, canonical
/// reduction and exact solve against the original generators.
class Lattice {
public:
    Lattice() : dim_(0) {}
    Lattice(std::size_t dimension, const std::vector<std::vector<Int>>& generators);

    std::size_t dimension() const { return dim_; }
    const IntMatrix& hnf_basis() const { return basis_; }

    bool contains(std::span<const Int> x) const;
    /// Canonical representative of x modulo the lattice (idempotent).
    std::vector<Int> reduce(std::span<const Int> x) const;
    /// Integer coefficients y with y * generators = x, if any.
    std::optional<std::vector<Int>> solve(std::span<const Int> x) const;
    /// Rational coefficients over the HNF basis rows, if x is in the Q-span.
    std::optional<std::vector<Rat>> rational_solve(std::span<const Int> x) const;

private:
    std::size_t dim_;
    IntMatrix gens_;              // original generator rows
    IntMatrix basis_;             // HNF rows, zero rows dropped
    IntMatrix u_;                 // basis_ = u_ * gens_ (first rank rows)
    std::vector<std::size_t> pivots_;
};

}  // namespace qsigma
