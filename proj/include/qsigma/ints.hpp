#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsigma {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division (rounds toward -inf, so canonical residues are nonnegative).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// gcd of all entries, nonnegative; 0 for the zero vector.
inline Int content(std::span<const Int> v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g;
}

inline bool is_zero_vector(std::span<const Int> v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer exceeds machine range: " + x.get_str());
    return x.get_si();
}

inline std::string rat_to_string(const Rat& x) { return x.get_str(); }

}  // namespace qsigma
