#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsigma/ints.hpp"

namespace qsigma {

unsigned euler_phi(unsigned t);

/// Coefficients of the t-th cyclotomic polynomial, low degree first, monic.
/// Memoized; thread-safe.
const std::vector<Int>& cyclotomic_polynomial(unsigned t);

/// An element of Q(zeta_t) in the power basis 1, zeta, ..., zeta^{phi(t)-1}
/// modulo Phi_t. Always kept reduced, so zero-testing and equality are
/// coefficient comparisons.
class CycNum {
public:
    explicit CycNum(unsigned t);  // zero
    CycNum(unsigned t, const Rat& value);

    static CycNum zeta_pow(unsigned t, long k);
    /// Reduce an arbitrary polynomial in zeta (low degree first) mod Phi_t.
    static CycNum reduce(unsigned t, std::vector<Rat> poly);

    unsigned order() const { return t_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum operator*(const Rat& r) const;
    bool operator==(const CycNum& o) const;

    /// Galois substitution zeta -> zeta^j (j coprime to t).
    CycNum galois(long j) const;

    std::string to_string() const;  // e.g. "-2", "1 + z^2" with z = zeta

private:
    unsigned t_;
    std::vector<Rat> c_;  // size euler_phi(t), reduced
};

}  // namespace qsigma
