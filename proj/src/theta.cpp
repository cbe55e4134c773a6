#include "qsigma/theta.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qsigma {

std::vector<std::complex<double>> default_theta_samples(std::size_t count) {
    // Radii in [0.6, 0.9] and [1.1, 1.8] (no q-power radius for any |q| >= 2
    // meets these bands within the annulus), arguments in [-2.4, 2.4].
    std::vector<std::complex<double>> samples;
    for (std::size_t j = 0; j < count; ++j) {
        const double u = count > 1 ? static_cast<double>(j) / (count - 1) : 0.0;
        const double r = (j % 2 == 0) ? 0.6 + 0.3 * u : 1.1 + 0.7 * u;
        const double phase = -2.4 + 4.8 * (static_cast<double>((j * 7) % count) + 0.5) / count;
        samples.push_back(std::polar(r, phase));
    }
    return samples;
}

std::complex<double> theta_eval(const ThetaParams& p, std::complex<double> z, double* err_estimate) {
    if (std::abs(p.q) <= 1.0) throw std::invalid_argument("theta_eval: |q| must exceed 1");
    if (z == std::complex<double>(0.0)) throw std::invalid_argument("theta_eval: z must be nonzero");
    if (p.truncation < 8) throw std::invalid_argument("theta_eval: truncation too small");
    // term(n) = (-1)^n q^{-n(n-1)/2} z^n; term(n+1)/term(n) = -z * q^{-n}.
    std::complex<double> sum = 1.0;  // n = 0
    std::complex<double> term = 1.0;
    const std::complex<double> qinv = 1.0 / p.q;
    std::complex<double> ratio = -z;  // towards n+1, divided by q^n as we go
    for (int n = 0; n < p.truncation; ++n) {
        term *= ratio;
        sum += term;
        ratio *= qinv;
    }
    std::complex<double> up_last = term * ratio;
    term = 1.0;
    ratio = -qinv / z;  // term(n-1)/term(n) = -q^{n-1}/z, starting at n = 0
    for (int n = 0; n > -p.truncation; --n) {
        term *= ratio;
        sum += term;
        ratio *= qinv;
    }
    std::complex<double> down_last = term * ratio;
    if (err_estimate) *err_estimate = 2.0 * (std::abs(up_last) + std::abs(down_last));
    return -sum;
}

double functional_eq_residual(const ThetaParams& p) {
    double worst = 0.0;
    for (std::complex<double> z : p.samples) {
        std::complex<double> lhs = theta_eval(p, p.q * z);
        std::complex<double> rhs = -p.q * z * theta_eval(p, z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double sigma_q_invariance_residual(const std::vector<ThetaMonomial>& monomial, unsigned t,
                                   const ThetaParams& p) {
    if (t < 1) throw std::invalid_argument("sigma_q_invariance_residual: t must be positive");
    const double two_pi = 2.0 * std::numbers::pi;
    auto lambda_at = [&](std::complex<double> z) {
        std::complex<double> value = 1.0;
        for (const ThetaMonomial& m : monomial) {
            const std::complex<double> zeta_shift =
                std::polar(1.0, two_pi * static_cast<double>(((m.shift % static_cast<long>(t)) +
                                                              static_cast<long>(t)) %
                                                             static_cast<long>(t)) /
                                    t);
            value *= std::pow(theta_eval(p, zeta_shift * z), static_cast<double>(m.exp));
        }
        return value;
    };
    double worst = 0.0;
    for (std::complex<double> z : p.samples) {
        std::complex<double> ratio = lambda_at(p.q * z) / lambda_at(z);
        worst = std::max(worst, std::abs(ratio - 1.0));
    }
    return worst;
}

double relation_check_431(int kind, unsigned t, std::optional<long> u, std::optional<long> v,
                          std::optional<long> n, const ThetaParams& p) {
    switch (kind) {
        case 1: {
            if (t < 3) throw std::invalid_argument("relation kind 1 requires t >= 3");
            return sigma_q_invariance_residual({{0, 1}, {1, -2}, {2, 1}}, t, p);
        }
        case 2: {
            if (!u || !v || !n) throw std::invalid_argument("relation kind 2 requires u, v, n");
            if (*n < 1 || t % *n != 0) throw std::invalid_argument("relation kind 2: n must divide t");
            const long m = static_cast<long>(t) / *n;
            if (std::gcd(m, *n) != 1) throw std::invalid_argument("relation kind 2: t = m*n must be coprime");
            const long t_l = static_cast<long>(t);
            if (((*u - *v) % t_l + t_l) % t_l == 0)
                throw std::invalid_argument("relation kind 2: sigma^u and sigma^v coincide");
            if ((*u - *v) * *n % t_l != 0)
                throw std::invalid_argument("relation kind 2: sigma^{un} and sigma^{vn} differ");
            if ((*u * *n) % t_l == 0)
                throw std::invalid_argument("relation kind 2: sigma^{un} must not be the identity");
            return sigma_q_invariance_residual({{*u, *n}, {*v, -*n}}, t, p);
        }
        case 3: {
            if (t < 2) throw std::invalid_argument("relation kind 3 requires t >= 2");
            return sigma_q_invariance_residual({{0, static_cast<long>(t)}, {1, -static_cast<long>(t)}}, t, p);
        }
        default:
            throw std::invalid_argument("relation kind must be 1, 2 or 3");
    }
}

std::size_t benrelation_collocation_rank(unsigned t, const ThetaParams& p, double threshold) {
    if (t < 2) throw std::invalid_argument("benrelation_collocation_rank: t must be at least 2");
    const std::size_t cols = 1 + static_cast<std::size_t>(t) * (t - 1);
    if (p.samples.size() < cols)
        throw std::invalid_argument("benrelation_collocation_rank: not enough sample points");
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::vector<std::complex<double>>> m;
    for (std::complex<double> z : p.samples) {
        std::vector<std::complex<double>> row;
        row.push_back(1.0);
        for (unsigned i = 0; i < t; ++i) {
            std::complex<double> value = theta_eval(p, std::polar(1.0, two_pi * i / t) * z);
            std::complex<double> power = 1.0;
            for (unsigned d = 1; d < t; ++d) {
                power *= value;
                row.push_back(power);
            }
        }
        m.push_back(std::move(row));
    }
    // Normalize each column, then eliminate with a relative threshold.
    for (std::size_t col = 0; col < cols; ++col) {
        double norm = 0.0;
        for (const auto& row : m) norm = std::max(norm, std::abs(row[col]));
        if (norm > 0.0)
            for (auto& row : m) row[col] /= norm;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        for (std::size_t i = rank; i < m.size(); ++i)
            if (std::abs(m[i][col]) > std::abs(m[pivot][col])) pivot = i;
        if (std::abs(m[pivot][col]) <= threshold) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            std::complex<double> f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace qsigma
