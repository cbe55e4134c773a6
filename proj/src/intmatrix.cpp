#include "qsigma/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsigma {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    if (rows_ == 0) return 1;
    IntMatrix w = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < rows_ && w.at(p, k) == 0) ++p;
            if (p == rows_) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < cols_; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(rows_ - 1, rows_ - 1) : -w.at(rows_ - 1, rows_ - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

HnfDecomposition hermite_normal_form(const IntMatrix& m) {
    HnfDecomposition d{m, IntMatrix::identity(m.rows()), {}};
    IntMatrix& h = d.h;
    IntMatrix& u = d.u;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        // Euclid on the column below r until a single nonzero entry remains.
        while (true) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == m.rows() || cmp(abs(h.at(i, col)), abs(h.at(best, col))) < 0) best = i;
            }
            if (best == m.rows()) break;  // column clear
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = floor_div(h.at(i, col), h.at(r, col));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h.at(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, col), h.at(r, col));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        d.pivot_cols.push_back(col);
        ++r;
    }
    return d;
}

SnfDecomposition smith_normal_form(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("smith_normal_form: empty matrix");
    SnfDecomposition d{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& s = d.s;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block to the pivot.
            std::size_t bi = m.rows(), bj = m.cols();
            for (std::size_t i = t; i < m.rows(); ++i)
                for (std::size_t j = t; j < m.cols(); ++j) {
                    if (s.at(i, j) == 0) continue;
                    if (bi == m.rows() || cmp(abs(s.at(i, j)), abs(s.at(bi, bj))) < 0) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m.rows()) goto done;  // trailing block zero
            s.swap_rows(t, bi);
            d.u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            d.v.swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = floor_div(s.at(i, t), s.at(t, t));
                s.add_row_multiple(i, t, -q);
                d.u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = floor_div(s.at(t, j), s.at(t, t));
                s.add_col_multiple(j, t, -q);
                d.v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols() && divides; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        d.u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            d.u.negate_row(t);
        }
    }
done:
    return d;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
    if (m.cols() == 0) return {};
    if (m.rows() == 0 || m.is_zero()) {
        std::vector<std::vector<Int>> basis;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<Int> e(m.cols(), Int(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    SnfDecomposition d = smith_normal_form(m);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(d.s.rows(), d.s.cols()); ++i)
        if (d.s.at(i, i) != 0) ++rank;
    if (rank == m.cols()) return {};
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = rank; j < m.cols(); ++j) {
        std::vector<Int> v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) v[i] = d.v.at(i, j);
        basis.push_back(std::move(v));
    }
    // Canonical: Hermite-reduce the basis rows, then strip contents.
    HnfDecomposition h = hermite_normal_form(IntMatrix::from_rows(basis));
    basis.clear();
    for (std::size_t i = 0; i < h.rank(); ++i) {
        std::vector<Int> v = h.h.row(i);
        Int g = content(v);
        if (g > 1)
            for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(v));
    }
    return basis;
}

Lattice::Lattice(std::size_t dimension, const std::vector<std::vector<Int>>& generators) : dim_(dimension) {
    for (const auto& g : generators)
        if (g.size() != dim_) throw std::invalid_argument("Lattice: generator dimension mismatch");
    if (generators.empty()) {
        gens_ = IntMatrix(0, dim_);
        basis_ = IntMatrix(0, dim_);
        u_ = IntMatrix(0, 0);
        return;
    }
    gens_ = IntMatrix::from_rows(generators);
    HnfDecomposition d = hermite_normal_form(gens_);
    pivots_ = d.pivot_cols;
    const std::size_t r = d.rank();
    basis_ = IntMatrix(r, dim_);
    u_ = IntMatrix(r, gens_.rows());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) basis_.at(i, j) = d.h.at(i, j);
        for (std::size_t j = 0; j < gens_.rows(); ++j) u_.at(i, j) = d.u.at(i, j);
    }
}

bool Lattice::contains(std::span<const Int> x) const { return solve(x).has_value(); }

std::vector<Int> Lattice::reduce(std::span<const Int> x) const {
    if (x.size() != dim_) throw std::invalid_argument("Lattice::reduce: dimension mismatch");
    std::vector<Int> r(x.begin(), x.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t p = pivots_[i];
        Int q = floor_div(r[p], basis_.at(i, p));
        if (q == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) r[j] -= q * basis_.at(i, j);
    }
    return r;
}

std::optional<std::vector<Int>> Lattice::solve(std::span<const Int> x) const {
    if (x.size() != dim_) throw std::invalid_argument("Lattice::solve: dimension mismatch");
    std::vector<Int> r(x.begin(), x.end());
    std::vector<Int> z(basis_.rows(), Int(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p] % basis_.at(i, p) != 0) return std::nullopt;
        Int q = r[p] / basis_.at(i, p);
        z[i] = q;
        if (q != 0)
            for (std::size_t j = 0; j < dim_; ++j) r[j] -= q * basis_.at(i, j);
    }
    if (!is_zero_vector(r)) return std::nullopt;
    std::vector<Int> y(gens_.rows(), Int(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < gens_.rows(); ++j) y[j] += z[i] * u_.at(i, j);
    return y;
}

std::optional<std::vector<Rat>> Lattice::rational_solve(std::span<const Int> x) const {
    if (x.size() != dim_) throw std::invalid_argument("Lattice::rational_solve: dimension mismatch");
    std::vector<Rat> r(dim_);
    for (std::size_t j = 0; j < dim_; ++j) r[j] = Rat(x[j]);
    std::vector<Rat> z(basis_.rows(), Rat(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const std::size_t p = pivots_[i];
        Rat q = r[p] / Rat(basis_.at(i, p));
        z[i] = q;
        if (q != 0)
            for (std::size_t j = 0; j < dim_; ++j) r[j] -= q * Rat(basis_.at(i, j));
    }
    for (const Rat& c : r)
        if (c != 0) return std::nullopt;
    return z;
}

}  // namespace qsigma
