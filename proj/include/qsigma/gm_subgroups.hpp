#pragma once

#include <optional>
#include <vector>

#include "qsigma/intmatrix.hpp"

namespace qsigma {

/// Idempotent-weighted monomial equations on the multiplicative group of a
/// pseudofield with t cyclically permuted components. Exponent vectors are
/// over (x, rho(x), ..., rho^{t-1}(x)).
struct MonomialSystem {
    unsigned t = 0;
    struct Equation {
        std::size_t idempotent;       // index in [0, t)
        std::vector<Int> exponents;   // length t
    };
    std::vector<Equation> equations;
};

/// A multiplicative function on the split torus: per idempotent either a
/// monomial (exponent vector over rho^j(x)) or the zero function. The zero
/// case makes phi(x) = 1 unsolvable.
struct GmMultFunction {
    unsigned t = 0;
    std::vector<std::optional<std::vector<Int>>> rows;  // one per idempotent

    bool has_zero_component() const;
};

/// The shift-and-sum reduction to a single multiplicative equation
/// phi(x) = 1 defining the same subgroup. Requires at most one equation per
/// idempotent (missing ones are padded with identity equations at the tail)
/// or a single-idempotent system.
GmMultFunction reduce_to_phi(const MonomialSystem& sys);

/// Componentwise exponent matrix of phi(x) = 1 over the coordinates
/// (x_0, ..., x_{t-1}); nullopt when some component of phi is zero.
std::optional<IntMatrix> phi_equation_matrix(const GmMultFunction& phi);

/// One element of a finite solution group: per coordinate a root of unity
/// exp(2*pi*i*num/den), stored as the reduced fraction num/den in [0, 1).
struct RootOfUnityTuple {
    std::vector<std::pair<Int, Int>> coords;  // (num, den), den >= 1
    bool operator==(const RootOfUnityTuple&) const = default;
};

/// Structure of the solution group of monomial equations on the torus:
/// cokernel data of the exponent matrix, with explicit enumeration when
/// finite. `empty` marks the phi = e pathology (no solutions at all).
struct GroupStructure {
    bool empty = false;
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // elementary divisors > 1
    std::optional<std::vector<RootOfUnityTuple>> elements;
};

GroupStructure group_structure(const IntMatrix& equations, unsigned t);

/// Full pipeline for a phi that may have zero components.
GroupStructure group_structure(const GmMultFunction& phi);

/// The subgroup of the t-component torus cut out by a plain multiplicative
/// function (the same exponent vector acting on every idempotent, i.e. the
/// Sigma_1-ideal generated by e_0*(phi(x) - 1)).
GroupStructure subgroup_of_mult_function(const std::vector<Int>& n, unsigned t);

}  // namespace qsigma
