#include "qsigma/criterion.hpp"

#include <algorithm>

namespace qsigma {

ExponentSummary exponent_summary(const FactoredRatFun& f) {
    ExponentSummary s;
    s.t = f.t();
    s.orbit_count = f.orbit_count();
    s.a.assign(s.orbit_count, std::vector<Int>(s.t, Int(0)));
    s.window = 0;
    for (const auto& [ref, sv] : f.factors()) {
        s.a[ref.orbit][ref.zeta_exp] += sv;
        s.window = std::max(s.window, std::max(ref.q_exp, -ref.q_exp - 1));
    }
    return s;
}

std::vector<unsigned> DMatrix::zero_rows() const {
    std::vector<unsigned> rows;
    for (unsigned k = 0; k < t; ++k) {
        bool zero = true;
        for (std::size_t i = 0; i < orbit_count && zero; ++i) zero = d[k][i].is_zero();
        if (zero) rows.push_back(k);
    }
    return rows;
}

DMatrix build_D(const ExponentSummary& s) {
    DMatrix m;
    m.t = s.t;
    m.orbit_count = s.orbit_count;
    m.d.assign(s.t, std::vector<CycNum>(s.orbit_count, CycNum(s.t)));
    for (unsigned k = 0; k < s.t; ++k)
        for (std::size_t i = 0; i < s.orbit_count; ++i) {
            CycNum sum(s.t);
            for (unsigned j = 0; j < s.t; ++j)
                sum += CycNum::zeta_pow(s.t, static_cast<long>(k) * j) * Rat(s.a[i][j]);
            m.d[k][i] = sum;
        }
    return m;
}

namespace {

using CycMatrix = std::vector<std::vector<CycNum>>;

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b, unsigned t) {
    const std::size_t n = a.size();
    CycMatrix r(n, std::vector<CycNum>(n, CycNum(t)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

bool dft_identity_check(const ExponentSummary& s) {
    const unsigned t = s.t;
    CycMatrix e_plus(t, std::vector<CycNum>(t, CycNum(t)));
    CycMatrix e_minus(t, std::vector<CycNum>(t, CycNum(t)));
    for (unsigned i = 0; i < t; ++i)
        for (unsigned j = 0; j < t; ++j) {
            e_plus[i][j] = CycNum::zeta_pow(t, static_cast<long>(i) * j);
            e_minus[i][j] = CycNum::zeta_pow(t, -static_cast<long>(i) * j);
        }
    DMatrix dm = build_D(s);
    for (std::size_t i = 0; i < s.orbit_count; ++i) {
        CycMatrix a(t, std::vector<CycNum>(t, CycNum(t)));
        CycMatrix d(t, std::vector<CycNum>(t, CycNum(t)));
        for (unsigned r = 0; r < t; ++r) {
            for (unsigned c = 0; c < t; ++c) a[r][c] = CycNum(t, Rat(s.a[i][(r + c) % t]));
            d[r][r] = dm.d[r][i];
        }
        if (!(cyc_mul(e_plus, a, t) == cyc_mul(d, e_minus, t))) return false;
    }
    return true;
}

}  // namespace qsigma
