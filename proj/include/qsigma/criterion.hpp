#pragma once

#include <vector>

#include "qsigma/cyclotomic.hpp"
#include "qsigma/ratfun.hpp"

namespace qsigma {

/// Per-orbit multiplicity profile a[i][k] = sum over d of the stored factor
/// exponents, plus the minimal window N with all factor q-shifts inside
/// [-N-1, N].
struct ExponentSummary {
    unsigned t = 0;
    std::size_t orbit_count = 0;
    long long window = 0;
    std::vector<std::vector<Int>> a;  // a[i][k]
};

ExponentSummary exponent_summary(const FactoredRatFun& f);

/// The t x R matrix d[k][i] = sum_j zeta^{k*j} * a[i][j]; its zero rows
/// decide dependence. Row 0 is the vector of integer column sums.
struct DMatrix {
    unsigned t = 0;
    std::size_t orbit_count = 0;
    std::vector<std::vector<CycNum>> d;  // d[k][i]

    /// Indices k whose whole row is zero; every row when R = 0.
    std::vector<unsigned> zero_rows() const;
};

DMatrix build_D(const ExponentSummary& s);

/// Exact check of E_+ * A_i = D_i * E_- for every orbit (the circulant
/// diagonalization identity behind the zero-row criterion).
bool dft_identity_check(const ExponentSummary& s);

}  // namespace qsigma
