#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace qsigma {

/// Parameters for the truncated theta series sum_{|n| <= truncation}.
struct ThetaParams {
    std::complex<double> q;
    int truncation = 40;
    std::vector<std::complex<double>> samples;
};

/// Deterministic sample points on the annulus 0.5 <= |z| <= 2, radii kept
/// away from the q-power lattice and arguments away from the negative real
/// axis (where the theta zeros -q^k live).
std::vector<std::complex<double>> default_theta_samples(std::size_t count);

/// theta_q(z) = -sum_n (-1)^n q^{-n(n-1)/2} z^n, truncated symmetrically;
/// requires |q| > 1 and z != 0. err_estimate, when given, receives a bound
/// from the first omitted terms.
std::complex<double> theta_eval(const ThetaParams& p, std::complex<double> z,
                                double* err_estimate = nullptr);

/// max over samples of |theta(qz) + qz * theta(z)|.
double functional_eq_residual(const ThetaParams& p);

/// A monomial in shifted thetas: lambda(z) = prod theta(zeta^{shift} z)^{exp}.
struct ThetaMonomial {
    long shift;
    long exp;
};

/// max over samples of |lambda(qz)/lambda(z) - 1| for the given monomial
/// with zeta = exp(2 pi i / t).
double sigma_q_invariance_residual(const std::vector<ThetaMonomial>& monomial, unsigned t,
                                   const ThetaParams& p);

/// The three relation families: (1) y*sigma_{zeta^2}(y) - lambda*(sigma_zeta y)^2
/// with t >= 3; (2) (sigma_{zeta^u} y)^n - lambda*(sigma_{zeta^v} y)^n with
/// t = m*n coprime and sigma_zeta^{un} = sigma_zeta^{vn} != id; (3) y^t -
/// lambda*(sigma_zeta y)^t. Returns the max residual of sigma_q-invariance
/// of the lambda expression.
double relation_check_431(int kind, unsigned t, std::optional<long> u, std::optional<long> v,
                          std::optional<long> n, const ThetaParams& p);

/// Heuristic non-degeneracy probe: numerical rank (relative threshold) of
/// the collocation matrix of {1} and {theta(zeta^i z)^d : i < t, 0 < d < t}
/// at the sample points. Full column rank (1 + t*(t-1)) means no
/// constant-coefficient linear relation among these powers is visible at
/// the samples. Heuristic only, never a proof.
std::size_t benrelation_collocation_rank(unsigned t, const ThetaParams& p, double threshold = 1e-8);

}  // namespace qsigma
