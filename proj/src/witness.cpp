#include "qsigma/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qsigma {

namespace {

// Candidate order inside a max-norm shell: smallest L1 norm, then fewest
// nonzero entries, then earliest support positions, then lexicographically
// largest entries. Only vectors whose first nonzero entry is positive are
// kept (the mirror certificate is equivalent).
bool candidate_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long l1a = 0, l1b = 0;
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        l1a += std::llabs(a[i]);
        l1b += std::llabs(b[i]);
        sa += a[i] != 0;
        sb += b[i] != 0;
    }
    if (l1a != l1b) return l1a < l1b;
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool na = a[i] != 0, nb = b[i] != 0;
        if (na != nb) return na;
    }
    return a > b;
}

const std::vector<std::vector<long long>>& shell_candidates(unsigned t, long long m) {
    static std::map<std::pair<unsigned, long long>, std::vector<std::vector<long long>>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(t, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<long long>> shell;
    std::vector<long long> v(t, -m);
    while (true) {
        long long norm = 0;
        long long first_nonzero = 0;
        for (long long x : v) {
            norm = std::max(norm, std::llabs(x));
            if (first_nonzero == 0) first_nonzero = x;
        }
        if (norm == m && first_nonzero > 0) shell.push_back(v);
        std::size_t i = 0;
        while (i < t && v[i] == m) v[i++] = -m;
        if (i == t) break;
        ++v[i];
    }
    std::sort(shell.begin(), shell.end(), candidate_less);
    return cache.emplace(std::move(key), std::move(shell)).first->second;
}

bool shell_feasible(unsigned t, long long m) {
    return t <= 10 && std::pow(2.0 * static_cast<double>(m) + 1.0, t) <= 2e6;
}

std::vector<std::vector<Int>> circulant_rows(const ExponentSummary& s, CaseTag tag) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < s.orbit_count; ++i)
        for (unsigned k = 0; k < s.t; ++k) {
            std::vector<Int> row(s.t);
            for (unsigned j = 0; j < s.t; ++j) row[j] = s.a[i][(k + j) % s.t];
            rows.push_back(std::move(row));
        }
    if (tag == CaseTag::case2) rows.push_back(std::vector<Int>(s.t, Int(1)));
    return rows;
}

bool in_row_kernel(const std::vector<std::vector<Int>>& rows, const std::vector<long long>& v) {
    for (const auto& row : rows) {
        Int dot = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (v[j] != 0) dot += row[j] * Int(static_cast<long>(v[j]));
        if (dot != 0) return false;
    }
    return true;
}

/// Exponent e with c = q^e modulo the declared relations, when one exists.
std::optional<Int> discrete_log_q(const ConstElem& c) {
    const ConstGroup& grp = *c.group;
    std::vector<std::vector<Int>> rows;
    rows.push_back(grp.q_power(1).exponents);
    const IntMatrix& rel = grp.relation_lattice().hnf_basis();
    for (std::size_t i = 0; i < rel.rows(); ++i) rows.push_back(rel.row(i));
    Lattice lat(c.exponents.size(), rows);
    auto y = lat.solve(c.exponents);
    if (!y) return std::nullopt;
    return (*y)[0];
}

std::vector<Int> divisors_descending(const Int& g) {
    if (g > 1000000) return {g, Int(1)};
    long n = to_long(g);
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    std::vector<Int> out;
    for (auto it = large.begin(); it != large.end(); ++it) out.push_back(Int(*it));
    for (auto it = small.rbegin(); it != small.rend(); ++it) out.push_back(Int(*it));
    return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_n(const ExponentSummary& s, CaseTag tag) {
    const unsigned t = s.t;
    std::vector<std::vector<Int>> rows = circulant_rows(s, tag);
    std::vector<std::vector<Int>> basis;
    if (rows.empty()) {
        for (unsigned j = 0; j < t; ++j) {
            std::vector<Int> e(t, Int(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
    } else {
        basis = integer_kernel(IntMatrix::from_rows(rows));
    }
    if (basis.empty()) return std::nullopt;

    Int mstar = 0;
    for (const auto& row : basis) {
        Int norm = 0;
        for (const Int& x : row) norm = std::max(norm, Int(abs(x)));
        if (mstar == 0 || norm < mstar) mstar = norm;
    }
    if (mstar.fits_slong_p()) {
        const long long cap = to_long(mstar);
        for (long long m = 1; m <= cap && shell_feasible(t, m); ++m)
            for (const auto& v : shell_candidates(t, m))
                if (in_row_kernel(rows, v)) {
                    std::vector<Int> out(t);
                    for (unsigned j = 0; j < t; ++j) out[j] = static_cast<long>(v[j]);
                    return out;
                }
    }
    // Lattice too wide to enumerate: take the best basis vector directly.
    std::vector<std::vector<Int>> normalized = basis;
    for (auto& row : normalized) {
        Int g = content(row);
        if (g > 1)
            for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        for (const Int& x : row) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : row) y = -y;
            break;
        }
    }
    auto int_less = [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int l1a = 0, l1b = 0;
        int sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            l1a += abs(a[i]);
            l1b += abs(b[i]);
            sa += a[i] != 0;
            sb += b[i] != 0;
        }
        if (l1a != l1b) return l1a < l1b;
        if (sa != sb) return sa < sb;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const bool na = a[i] != 0, nb = b[i] != 0;
            if (na != nb) return na;
        }
        return a > b;
    };
    return *std::min_element(normalized.begin(), normalized.end(), int_less);
}

std::vector<Int> rescale_n(const std::vector<Int>& n, const LambdaClass& plan, unsigned t) {
    Int c = 1;
    if (plan.tag == CaseTag::case1) {
        if (plan.q_relation)
            c = plan.q_relation->first;
        else if (plan.torsion_order)
            c = *plan.torsion_order;
        else
            throw std::invalid_argument("rescale_n: Case 1 plan without relation data");
    }
    const Int scale = Int(t) * c;
    std::vector<Int> out(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) out[i] = scale * n[i];
    return out;
}

std::optional<FactoredRatFun> recover_l_M(const FactoredRatFun& a, const MultFunction& phi) {
    if (phi.length() != a.t()) throw std::invalid_argument("recover_l_M: phi length differs from t");
    if (phi.is_identity_exponent()) return std::nullopt;
    FactoredRatFun g = apply_phi(phi, a);
    if (g.z_power() != 0) return std::nullopt;

    FactoredRatFun b(a.group_ptr(), a.orbit_names());
    Int sum_l = 0;
    auto it = g.factors().begin();
    while (it != g.factors().end()) {
        const std::size_t orbit = it->first.orbit;
        const unsigned k = it->first.zeta_exp;
        // l_{k,d} is the prefix sum of the exponents of phi(a) below d; it
        // vanishes above the support iff the run telescopes.
        Int prefix = 0;
        long long prev_d = 0;
        bool first = true;
        while (it != g.factors().end() && it->first.orbit == orbit && it->first.zeta_exp == k) {
            const long long d = it->first.q_exp;
            if (!first && prefix != 0)
                for (long long dd = prev_d + 1; dd <= d; ++dd) {
                    b.add_factor(orbit, k, dd, prefix);
                    sum_l += prefix;
                }
            prefix += it->second;
            prev_d = d;
            first = false;
            ++it;
        }
        if (prefix != 0) return std::nullopt;
    }

    auto e = discrete_log_q(g.constant());
    if (!e) return std::nullopt;
    b.set_z_power(*e - sum_l);
    return b;
}

bool verify(const FactoredRatFun& a, const Witness& w) {
    if (w.phi.length() != a.t()) throw std::invalid_argument("verify: phi length differs from t");
    if (w.phi.is_identity_exponent()) return false;
    return ratfun_equal(apply_phi(w.phi, a), sigma_q_ratio(w.b));
}

std::optional<Witness> synthesize_witness(const FactoredRatFun& a, const LambdaClass& plan,
                                          const ExponentSummary& s, SynthesisTrace* trace) {
    auto n0 = solve_n(s, plan.tag);
    if (!n0) return std::nullopt;
    const std::vector<Int> n = rescale_n(*n0, plan, s.t);
    if (trace) {
        trace->kernel_n = *n0;
        trace->rescaled_n = n;
    }
    for (const Int& div : divisors_descending(content(n))) {
        std::vector<Int> cand(n.size());
        for (std::size_t i = 0; i < n.size(); ++i)
            mpz_divexact(cand[i].get_mpz_t(), n[i].get_mpz_t(), div.get_mpz_t());
        MultFunction phi{std::move(cand)};
        auto b = recover_l_M(a, phi);
        if (!b) continue;
        Witness w{std::move(phi), std::move(*b)};
        if (!verify(a, w)) throw std::logic_error("synthesized witness failed verification");
        return w;
    }
    throw std::logic_error("witness synthesis: rescaled kernel vector failed recovery");
}

std::optional<Witness> brute_force_oracle(const FactoredRatFun& a, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_oracle: bound must be positive");
    const unsigned t = a.t();
    const ExponentSummary s = exponent_summary(a);
    const std::vector<std::vector<Int>> rows = circulant_rows(s, CaseTag::case1);
    // Machine-word copy of the circulant rows for the enumeration hot loop.
    bool small = true;
    std::vector<std::vector<long long>> rows_ll;
    for (const auto& row : rows) {
        std::vector<long long> r(row.size());
        for (std::size_t j = 0; j < row.size() && small; ++j) {
            if (!row[j].fits_slong_p() || abs(row[j]) > 1000000000)
                small = false;
            else
                r[j] = row[j].get_si();
        }
        rows_ll.push_back(std::move(r));
    }
    auto in_kernel_fast = [&](const std::vector<long long>& v) {
        for (const auto& row : rows_ll) {
            long long dot = 0;
            for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * v[j];
            if (dot != 0) return false;
        }
        return true;
    };
    const bool t_nonzero = a.z_power() != 0;
    const long long cap = to_long(bound);
    for (long long m = 1; m <= cap; ++m) {
        if (!shell_feasible(t, m))
            throw std::invalid_argument("brute_force_oracle: enumeration bound too large");
        for (const auto& v : shell_candidates(t, m)) {
            long long n_total = 0;
            for (long long x : v) n_total += x;
            if (t_nonzero && n_total != 0) continue;
            if (small ? !in_kernel_fast(v) : !in_row_kernel(rows, v)) continue;
            MultFunction phi;
            for (long long x : v) phi.n.emplace_back(static_cast<long>(x));
            auto b = recover_l_M(a, phi);
            if (!b) continue;
            Witness w{std::move(phi), std::move(*b)};
            if (verify(a, w)) return w;
        }
    }
    return std::nullopt;
}

Verdict decide(const FactoredRatFun& a) {
    if (a.t() < 2) throw std::invalid_argument("decide: t must be at least 2");
    Verdict v;
    v.lambda_class = classify_lambda(a.constant(), a.z_power());
    v.tag = v.lambda_class.tag;
    v.summary = exponent_summary(a);
    v.dmatrix = build_D(v.summary);
    v.zero_rows = v.dmatrix.zero_rows();
    bool dependent = false;
    for (unsigned k : v.zero_rows)
        if (v.tag == CaseTag::case1 || k != 0) dependent = true;
    auto w = synthesize_witness(a, v.lambda_class, v.summary, &v.synthesis);
    if (w.has_value() != dependent)
        throw std::logic_error("decide: zero-row verdict disagrees with kernel solvability");
    v.dependent = dependent;
    v.witness = std::move(w);
    return v;
}

}  // namespace qsigma
