#pragma once

#include <optional>
#include <vector>

#include "qsigma/criterion.hpp"
#include "qsigma/ratfun.hpp"

namespace qsigma {

/// Certificate (phi, b) with phi(a) = sigma_q(b)/b. The constant of b is
/// fixed to 1; phi is never the zero exponent vector.
struct Witness {
    MultFunction phi;
    FactoredRatFun b;
};

/// Deterministic nonzero integer vector in the common kernel of the
/// circulants A_i (Case 2: also orthogonal to the all-ones row), or nullopt
/// when that kernel is trivial.
std::optional<std::vector<Int>> solve_n(const ExponentSummary& s, CaseTag tag);

/// The proof's rescaling: n -> t*c*n with c = u for Case 1 via lambda^u=q^v,
/// c = w for Case 1 via lambda^w=1, c = 1 for Case 2.
std::vector<Int> rescale_n(const std::vector<Int>& n, const LambdaClass& plan, unsigned t);

/// Recover b from phi by telescoping prefix sums over d and exact constant
/// completion (M from the q-discrete-log of the constant of phi(a)).
/// Nullopt when phi(a) is not a sigma_q-ratio of the factored shape.
std::optional<FactoredRatFun> recover_l_M(const FactoredRatFun& a, const MultFunction& phi);

/// Exact verification of phi(a) = sigma_q(b)/b in the factored calculus.
/// Total: usable on externally supplied witnesses.
bool verify(const FactoredRatFun& a, const Witness& w);

/// Intermediate synthesis data, kept for the --trace report.
struct SynthesisTrace {
    std::optional<std::vector<Int>> kernel_n;    // chosen kernel vector
    std::optional<std::vector<Int>> rescaled_n;  // after the t*c scaling
};

/// Full synthesis pipeline: solve, rescale, recover, then verify-gated
/// content reduction for a small deterministic certificate.
std::optional<Witness> synthesize_witness(const FactoredRatFun& a, const LambdaClass& plan,
                                          const ExponentSummary& s, SynthesisTrace* trace = nullptr);

/// Independent exhaustive search over all phi with max |n_r| <= bound,
/// returning the first verified witness in a fixed deterministic order.
std::optional<Witness> brute_force_oracle(const FactoredRatFun& a, const Int& bound);

/// Verdict of the zero-row criterion, with the synthesized certificate and
/// the intermediate data for tracing.
struct Verdict {
    bool dependent = false;
    CaseTag tag = CaseTag::case1;
    LambdaClass lambda_class;
    std::vector<unsigned> zero_rows;
    std::optional<Witness> witness;
    ExponentSummary summary;
    DMatrix dmatrix;
    SynthesisTrace synthesis;
};

/// The decision procedure: classify lambda, build D, apply the case split.
/// Dependent verdicts always carry a verified witness. Requires t >= 2.
Verdict decide(const FactoredRatFun& a);

}  // namespace qsigma
