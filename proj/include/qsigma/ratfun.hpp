#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsigma/constgroup.hpp"
#include "qsigma/ints.hpp"

namespace qsigma {

/// One linear factor (z - zeta^k * q^d * r_i), referencing declared orbit
/// base i.
struct RootRef {
    std::size_t orbit;   // index of the declared base root
    unsigned zeta_exp;   // k, canonical in [0, t)
    long long q_exp;     // d

    auto operator<=>(const RootRef&) const = default;
};

/// Multiplicative function phi(x) = x^{n_0} * sigma_zeta(x)^{n_1} * ... *
/// sigma_zeta^{t-1}(x)^{n_{t-1}}.
struct MultFunction {
    std::vector<Int> n;

    std::size_t length() const { return n.size(); }
    bool is_identity_exponent() const { return is_zero_vector(n); }
    bool operator==(const MultFunction&) const = default;
};

/// A rational function in fully factored form:
///   constant * z^z_power * prod (z - zeta^k q^d r_i)^{s}.
/// Base roots are opaque; distinctness of orbits modulo <zeta, q> is an
/// input contract. No zero exponents are ever stored.
class FactoredRatFun {
public:
    FactoredRatFun(std::shared_ptr<const ConstGroup> group, std::vector<std::string> orbit_names);

    unsigned t() const { return group_->zeta_order(); }
    const std::shared_ptr<const ConstGroup>& group_ptr() const { return group_; }
    const std::vector<std::string>& orbit_names() const { return orbit_names_; }
    std::size_t orbit_count() const { return orbit_names_.size(); }

    const ConstElem& constant() const { return constant_; }
    const Int& z_power() const { return z_power_; }
    const std::map<RootRef, Int>& factors() const { return factors_; }

    void set_constant(ConstElem c);
    void multiply_constant(const ConstElem& c);
    void set_z_power(Int T) { z_power_ = std::move(T); }
    /// Adds s to the exponent at (orbit, k mod t, d); prunes zeros.
    void add_factor(std::size_t orbit, long long k, long long d, const Int& s);

    Int total_factor_exponent() const;  // sum of all stored exponents
    bool is_constant() const { return factors_.empty() && z_power_ == 0; }

    std::string to_string() const;

private:
    std::shared_ptr<const ConstGroup> group_;
    std::vector<std::string> orbit_names_;
    ConstElem constant_;
    Int z_power_;
    std::map<RootRef, Int> factors_;
};

/// f(qz): every factor's q_exp drops by one, the constant gains
/// q^{z_power + sum of exponents}.
FactoredRatFun apply_sigma_q(const FactoredRatFun& f);

/// f(zeta^r z): the factor exponent at k of the result is the input exponent
/// at k + r; the constant gains zeta^{r * (z_power + sum of exponents)}.
FactoredRatFun apply_sigma_zeta(const FactoredRatFun& f, long long r);

/// f^{exp_f} * g^{exp_g}; requires the same constants group and orbit table.
FactoredRatFun combine(const FactoredRatFun& f, const FactoredRatFun& g, const Int& exp_f, const Int& exp_g);

FactoredRatFun ratfun_pow(const FactoredRatFun& f, const Int& e);

/// phi(f) = prod_r sigma_zeta^r(f)^{n_r}.
FactoredRatFun apply_phi(const MultFunction& phi, const FactoredRatFun& f);

/// sigma_q(b) / b.
FactoredRatFun sigma_q_ratio(const FactoredRatFun& b);

/// Semantic equality: equal z-powers, identical factor maps, constants equal
/// modulo the declared relations.
bool ratfun_equal(const FactoredRatFun& f, const FactoredRatFun& g);

}  // namespace qsigma
