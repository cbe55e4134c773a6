#include "qsigma/gm_subgroups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsigma {

bool GmMultFunction::has_zero_component() const {
    for (const auto& row : rows)
        if (!row) return true;
    return false;
}

namespace {

void validate_system(const MonomialSystem& sys) {
    if (sys.t < 1) throw std::invalid_argument("MonomialSystem: t must be positive");
    for (const auto& eq : sys.equations) {
        if (eq.idempotent >= sys.t) throw std::invalid_argument("MonomialSystem: idempotent index out of range");
        if (eq.exponents.size() != sys.t)
            throw std::invalid_argument("MonomialSystem: exponent vector length differs from t");
    }
}

std::vector<Int> cyclic_shift(const std::vector<Int>& v, long long by) {
    const long long t = static_cast<long long>(v.size());
    std::vector<Int> r(v.size());
    for (long long k = 0; k < t; ++k) r[k] = v[(((k - by) % t) + t) % t];
    return r;
}

}  // namespace

GmMultFunction reduce_to_phi(const MonomialSystem& sys) {
    validate_system(sys);
    const unsigned t = sys.t;

    // Normalize every equation to the idempotent e_0 by applying the inverse
    // shift, keeping a deterministic list order.
    std::vector<std::vector<Int>> normalized;
    std::map<std::size_t, std::size_t> per_idempotent;
    for (const auto& eq : sys.equations) ++per_idempotent[eq.idempotent];
    const bool one_each = std::all_of(sys.equations.begin(), sys.equations.end(), [&](const auto& eq) {
        return per_idempotent[eq.idempotent] == 1;
    });
    const bool single = per_idempotent.size() <= 1;
    if (!one_each && !single)
        throw std::invalid_argument("reduce_to_phi: multiple equations per idempotent are only supported "
                                    "on a single idempotent");
    if (sys.equations.size() > t)
        throw std::invalid_argument("reduce_to_phi: more equations than idempotents");

    std::vector<MonomialSystem::Equation> ordered = sys.equations;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.idempotent < b.idempotent; });
    for (const auto& eq : ordered)
        normalized.push_back(cyclic_shift(eq.exponents, -static_cast<long long>(eq.idempotent)));
    // Pad with identity equations at the tail.
    while (normalized.size() < t) normalized.push_back(std::vector<Int>(t, Int(0)));

    // Apply the j-th shift to the j-th equation and collect per idempotent.
    GmMultFunction phi;
    phi.t = t;
    for (unsigned j = 0; j < t; ++j) phi.rows.push_back(cyclic_shift(normalized[j], j));
    return phi;
}

std::optional<IntMatrix> phi_equation_matrix(const GmMultFunction& phi) {
    if (phi.has_zero_component()) return std::nullopt;
    const unsigned t = phi.t;
    IntMatrix e(phi.rows.size(), t);
    for (std::size_t j = 0; j < phi.rows.size(); ++j) {
        const std::vector<Int>& m = *phi.rows[j];
        // Component j of prod_k rho^k(x)^{m_k} is prod_k x_{(j-k) mod t}^{m_k}.
        for (unsigned c = 0; c < t; ++c)
            e.at(j, c) = m[((static_cast<long long>(j) - c) % t + t) % t];
    }
    return e;
}

GroupStructure group_structure(const IntMatrix& equations, unsigned t) {
    if (equations.cols() != t) throw std::invalid_argument("group_structure: column count differs from t");
    GroupStructure g;
    if (equations.rows() == 0 || equations.is_zero()) {
        g.free_rank = t;
        if (t == 0) g.elements = std::vector<RootOfUnityTuple>{RootOfUnityTuple{}};
        return g;
    }
    SnfDecomposition snf = smith_normal_form(equations);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i)
        if (snf.s.at(i, i) != 0) ++rank;
    g.free_rank = t - rank;
    for (std::size_t i = 0; i < rank; ++i)
        if (snf.s.at(i, i) > 1) g.torsion.push_back(snf.s.at(i, i));
    if (g.free_rank > 0) return g;

    // Finite: solutions x_k = exp(2 pi i sum_i V[k][i] c_i / s_i), c_i in
    // [0, s_i).
    std::vector<Int> divisors;
    for (std::size_t i = 0; i < rank; ++i) divisors.push_back(snf.s.at(i, i));
    std::vector<Int> counter(rank, Int(0));
    std::vector<RootOfUnityTuple> elements;
    while (true) {
        RootOfUnityTuple x;
        for (unsigned k = 0; k < t; ++k) {
            Rat f(0);
            for (std::size_t i = 0; i < rank; ++i) f += Rat(snf.v.at(k, i) * counter[i], divisors[i]);
            f.canonicalize();
            // Reduce into [0, 1).
            Int num = f.get_num(), den = f.get_den();
            num = num - floor_div(num, den) * den;
            x.coords.emplace_back(num, den);
        }
        elements.push_back(std::move(x));
        std::size_t i = 0;
        while (i < rank && counter[i] == divisors[i] - 1) counter[i++] = 0;
        if (i == rank) break;
        ++counter[i];
    }
    std::sort(elements.begin(), elements.end(), [](const RootOfUnityTuple& a, const RootOfUnityTuple& b) {
        for (std::size_t k = 0; k < a.coords.size(); ++k) {
            Int lhs = a.coords[k].first * b.coords[k].second;
            Int rhs = b.coords[k].first * a.coords[k].second;
            if (lhs != rhs) return lhs < rhs;
        }
        return false;
    });
    g.elements = std::move(elements);
    return g;
}

GroupStructure group_structure(const GmMultFunction& phi) {
    auto matrix = phi_equation_matrix(phi);
    if (!matrix) {
        GroupStructure g;
        g.empty = true;
        return g;
    }
    return group_structure(*matrix, phi.t);
}

GroupStructure subgroup_of_mult_function(const std::vector<Int>& n, unsigned t) {
    if (n.size() != t) throw std::invalid_argument("subgroup_of_mult_function: vector length differs from t");
    MonomialSystem sys;
    sys.t = t;
    for (unsigned i = 0; i < t; ++i) sys.equations.push_back({i, n});
    return group_structure(reduce_to_phi(sys));
}

}  // namespace qsigma
