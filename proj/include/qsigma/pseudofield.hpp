#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsigma/cyclotomic.hpp"
#include "qsigma/intmatrix.hpp"

namespace qsigma {

/// Finite abelian group given by cyclic factor orders; elements are
/// exponent tuples, indexed in mixed radix (last factor fastest).
struct FinAbGroup {
    std::vector<unsigned> orders;

    std::size_t size() const;
    std::size_t index(const std::vector<unsigned>& element) const;
    std::vector<unsigned> element(std::size_t index) const;
    std::vector<unsigned> add(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
    std::vector<unsigned> inverse(const std::vector<unsigned>& a) const;
    std::vector<unsigned> identity() const { return std::vector<unsigned>(orders.size(), 0); }
};

/// Action of one group generator on a product of cyclotomic fields: a
/// permutation of the components composed with a Galois twist per source
/// component ((g x)[perm[c]] = galois(aut[c], x[c])).
struct PfAction {
    std::vector<std::size_t> perm;
    std::vector<long> aut;
};

using PfElement = std::vector<CycNum>;

/// Desk-scale difference pseudofield: a finite product of copies of
/// Q(zeta_m) (m = 1 gives Q) carrying commuting generator actions; the
/// Sigma_1 generators have finite declared orders, sigma has infinite order.
class Pseudofield {
public:
    Pseudofield(unsigned base_order, std::size_t components);

    unsigned base_order() const { return base_order_; }
    std::size_t components() const { return n_; }

    /// Declare the sigma (Sigma_0) action; validated as an automorphism.
    void set_sigma(PfAction action);
    /// Declare a Sigma_1 generator of the given order; returns its index.
    std::size_t add_sigma1_generator(PfAction action, unsigned order);

    bool has_sigma() const { return sigma_.has_value(); }
    const PfAction& sigma() const;
    std::size_t sigma1_count() const { return sigma1_.size(); }
    const PfAction& sigma1_generator(std::size_t i) const { return sigma1_[i].first; }
    unsigned sigma1_order(std::size_t i) const { return sigma1_[i].second; }

    PfElement zero() const;
    PfElement one() const;
    PfElement indicator(std::size_t component) const;
    PfElement from_components(std::vector<CycNum> coords) const;

    PfElement add(const PfElement& a, const PfElement& b) const;
    PfElement mul(const PfElement& a, const PfElement& b) const;
    bool equal(const PfElement& a, const PfElement& b) const;

    PfElement apply(const PfAction& g, const PfElement& x) const;
    PfElement apply_sigma(const PfElement& x) const;
    PfElement apply_sigma1(std::size_t gen, const PfElement& x) const;
    /// Apply the Sigma_1 element with the given exponent tuple.
    PfElement apply_sigma1_word(const std::vector<unsigned>& exponents, const PfElement& x) const;

private:
    void validate_action(const PfAction& a, unsigned order) const;
    unsigned base_order_;
    std::size_t n_;
    std::optional<PfAction> sigma_;
    std::vector<std::pair<PfAction, unsigned>> sigma1_;
};

/// F_{Sigma_1}(B): components indexed by the elements of Sigma_1, Sigma_1
/// acting by translation (mu f)(tau) = f(mu^{-1} tau), sigma componentwise
/// by the Galois twist base_sigma_aut.
struct FSigma1 {
    Pseudofield pf;
    FinAbGroup group;
};
FSigma1 f_sigma1(unsigned base_order, const std::vector<unsigned>& cyclic_orders, long base_sigma_aut = 1);

/// Evaluation gamma_mu: f -> f(mu).
CycNum gamma_mu(const FSigma1& f, const std::vector<unsigned>& mu, const PfElement& x);

/// A ring homomorphism from a product of fields into the base field:
/// projection to one component followed by a Galois twist.
struct ScalarHom {
    std::size_t component;
    long aut_exp;
};

/// Taylor homomorphism Phi_mu : A -> F_{Sigma_1}(B) for a sigma-equivariant
/// phi : A -> B, defined by Phi_mu(a)(tau) = phi(mu tau^{-1} a); satisfies
/// gamma_mu(Phi_mu(a)) = phi(a).
class TaylorHom {
public:
    /// base_sigma_aut describes sigma on B; phi is checked to intertwine the
    /// sigma actions on a component basis of A.
    TaylorHom(const Pseudofield& domain, ScalarHom phi, std::vector<unsigned> mu, long base_sigma_aut = 1);

    const FSigma1& codomain() const { return codomain_; }
    PfElement operator()(const PfElement& a) const;
    CycNum phi(const PfElement& a) const;

private:
    const Pseudofield& domain_;
    ScalarHom phi_;
    std::vector<unsigned> mu_;
    FSigma1 codomain_;
};

/// Structure report for the fixed subring of a generator subset.
struct ConstantsReport {
    std::size_t dimension_over_q = 0;
    std::optional<std::size_t> dimension_over_base;  // set when a base-field submodule
    std::size_t indecomposable_idempotents = 0;
    std::vector<PfElement> basis;
    /// Multiplication table: coordinates of basis[i]*basis[j] over the basis
    /// (row-major), present when the products lie in the span (always, for a
    /// subring).
    std::vector<std::vector<Rat>> mult_table;
};

/// Fixed subring of the chosen generators (kernel of tau - id over Q).
ConstantsReport constants_subring(const Pseudofield& pf, bool include_sigma,
                                  const std::vector<std::size_t>& sigma1_gens);

/// Sigma-simplicity for a product of fields: the chosen generators generate
/// a permutation group transitive on the components.
bool is_simple(const Pseudofield& pf, bool include_sigma, const std::vector<std::size_t>& sigma1_gens);

}  // namespace qsigma
