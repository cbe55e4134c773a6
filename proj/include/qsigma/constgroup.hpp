#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsigma/intmatrix.hpp"
#include "qsigma/ints.hpp"

namespace qsigma {

class ConstGroup;

/// Element of the multiplicative constants group, written additively as an
/// exponent vector over the group's generators, interpreted modulo the
/// relation lattice.
struct ConstElem {
    std::shared_ptr<const ConstGroup> group;
    std::vector<Int> exponents;
};

enum class CaseTag { case1 = 1, case2 = 2 };

/// Outcome of the lambda classification: which case of the zero-row criterion
/// applies, plus the exponents driving the later witness rescaling.
struct LambdaClass {
    CaseTag tag;
    std::optional<std::pair<Int, Int>> q_relation;  // (u, v) with lambda^u = q^v, u,v != 0
    std::optional<Int> torsion_order;               // w with lambda^w = 1
};

/// Finitely presented abelian group of multiplicative constants. Generator 0
/// is always q (infinite order), generator 1 is zeta (order exactly t);
/// further generators are user symbols with declared relations.
class ConstGroup : public std::enable_shared_from_this<ConstGroup> {
public:
    class Builder {
    public:
        explicit Builder(unsigned t);
        std::size_t add_symbol(const std::string& name);
        /// Relation rows may reference symbols added so far plus q and zeta;
        /// shorter rows are zero-padded on build.
        void add_relation(std::vector<Int> exponents);
        std::shared_ptr<const ConstGroup> build() const;

    private:
        unsigned t_;
        std::vector<std::string> names_;
        std::vector<std::vector<Int>> relations_;
    };

    unsigned zeta_order() const { return t_; }
    std::size_t num_generators() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const Lattice& relation_lattice() const { return lattice_; }

    ConstElem one() const;
    ConstElem generator(std::size_t index) const;
    ConstElem q_power(const Int& e) const;
    ConstElem zeta_power(const Int& e) const;

    bool operator==(const ConstGroup& o) const;

    static constexpr std::size_t q_index = 0;
    static constexpr std::size_t zeta_index = 1;

private:
    friend class Builder;
    ConstGroup() = default;
    unsigned t_ = 0;
    std::vector<std::string> names_;
    Lattice lattice_;
};

ConstElem const_mul(const ConstElem& x, const ConstElem& y);
ConstElem const_pow(const ConstElem& x, const Int& e);
ConstElem const_canonical(const ConstElem& x);
bool const_equal(const ConstElem& x, const ConstElem& y);
bool const_is_one(const ConstElem& x);

/// Membership of x in the subgroup generated by gens (modulo relations).
bool subgroup_member(const ConstElem& x, const std::vector<ConstElem>& gens);

/// Smallest w >= 1 with x^w = 1, or nullopt when x has infinite order.
std::optional<Int> element_order(const ConstElem& x);

/// The sublattice {(u, v) : x^u = q^v} of Z^2, as a deterministic pair
/// (u, v) with u, v != 0 when the intersection is nontrivial.
std::optional<std::pair<Int, Int>> q_power_relation(const ConstElem& x);

/// Case split of the zero-row criterion: Case 1 iff T = 0 and lambda is a
/// root of unity or some lambda^u = q^v with u, v != 0.
LambdaClass classify_lambda(const ConstElem& lambda, const Int& T);

}  // namespace qsigma
