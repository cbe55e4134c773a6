#include "qsigma/constgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsigma {

namespace {

void check_same_group(const ConstElem& x, const ConstElem& y) {
    if (!x.group || !y.group) throw std::invalid_argument("constant element without group");
    if (x.group == y.group) return;
    if (!(*x.group == *y.group)) throw std::invalid_argument("constant elements from different groups");
}

}  // namespace

ConstGroup::Builder::Builder(unsigned t) : t_(t) {
    if (t < 1) throw std::invalid_argument("ConstGroup: zeta order must be positive");
    names_ = {"q", "zeta"};
}

std::size_t ConstGroup::Builder::add_symbol(const std::string& name) {
    if (name.empty() || std::find(names_.begin(), names_.end(), name) != names_.end())
        throw std::invalid_argument("ConstGroup: bad or duplicate symbol name: " + name);
    names_.push_back(name);
    return names_.size() - 1;
}

void ConstGroup::Builder::add_relation(std::vector<Int> exponents) {
    if (exponents.size() > names_.size()) throw std::invalid_argument("ConstGroup: relation too wide");
    relations_.push_back(std::move(exponents));
}

std::shared_ptr<const ConstGroup> ConstGroup::Builder::build() const {
    auto g = std::shared_ptr<ConstGroup>(new ConstGroup());
    g->t_ = t_;
    g->names_ = names_;
    const std::size_t m = names_.size();
    std::vector<std::vector<Int>> rows;
    std::vector<Int> zeta_rel(m, Int(0));
    zeta_rel[ConstGroup::zeta_index] = Int(t_);
    rows.push_back(std::move(zeta_rel));
    for (std::vector<Int> r : relations_) {
        r.resize(m, Int(0));
        rows.push_back(std::move(r));
    }
    g->lattice_ = Lattice(m, rows);

    // q must keep infinite order and zeta order exactly t.
    ConstElem q = g->generator(q_index);
    if (element_order(q)) throw std::invalid_argument("ConstGroup: declared relations give q finite order");
    ConstElem zeta = g->generator(zeta_index);
    auto zo = element_order(zeta);
    if (!zo || *zo != Int(t_))
        throw std::invalid_argument("ConstGroup: declared relations change the order of zeta");
    return g;
}

ConstElem ConstGroup::one() const {
    return ConstElem{shared_from_this(), std::vector<Int>(names_.size(), Int(0))};
}

ConstElem ConstGroup::generator(std::size_t index) const {
    if (index >= names_.size()) throw std::invalid_argument("ConstGroup: generator index out of range");
    ConstElem e = one();
    e.exponents[index] = 1;
    return e;
}

ConstElem ConstGroup::q_power(const Int& e) const {
    ConstElem x = one();
    x.exponents[q_index] = e;
    return x;
}

ConstElem ConstGroup::zeta_power(const Int& e) const {
    ConstElem x = one();
    x.exponents[zeta_index] = e;
    return x;
}

bool ConstGroup::operator==(const ConstGroup& o) const {
    return t_ == o.t_ && names_ == o.names_ && lattice_.hnf_basis() == o.lattice_.hnf_basis();
}

ConstElem const_mul(const ConstElem& x, const ConstElem& y) {
    check_same_group(x, y);
    ConstElem r = x;
    for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += y.exponents[i];
    return r;
}

ConstElem const_pow(const ConstElem& x, const Int& e) {
    ConstElem r = x;
    for (Int& c : r.exponents) c *= e;
    return r;
}

ConstElem const_canonical(const ConstElem& x) {
    ConstElem r = x;
    r.exponents = x.group->relation_lattice().reduce(x.exponents);
    return r;
}

bool const_equal(const ConstElem& x, const ConstElem& y) {
    check_same_group(x, y);
    std::vector<Int> diff(x.exponents.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.exponents[i] - y.exponents[i];
    return x.group->relation_lattice().contains(diff);
}

bool const_is_one(const ConstElem& x) { return x.group->relation_lattice().contains(x.exponents); }

bool subgroup_member(const ConstElem& x, const std::vector<ConstElem>& gens) {
    std::vector<std::vector<Int>> rows;
    for (const ConstElem& g : gens) {
        check_same_group(x, g);
        rows.push_back(g.exponents);
    }
    for (std::size_t i = 0; i < x.group->relation_lattice().hnf_basis().rows(); ++i)
        rows.push_back(x.group->relation_lattice().hnf_basis().row(i));
    Lattice span(x.exponents.size(), rows);
    return span.contains(x.exponents);
}

std::optional<Int> element_order(const ConstElem& x) {
    if (const_is_one(x)) return Int(1);
    auto coeffs = x.group->relation_lattice().rational_solve(x.exponents);
    if (!coeffs) return std::nullopt;  // not in the Q-span: infinite order
    Int w = 1;
    for (const Rat& c : *coeffs) w = int_lcm(w, c.get_den());
    return w;
}

std::optional<std::pair<Int, Int>> q_power_relation(const ConstElem& x) {
    // Solve u*x - v*q in L over (u, v, coefficients of L); the projections of
    // the solution space onto (u, v) form a sublattice of Z^2.
    const std::size_t m = x.exponents.size();
    const IntMatrix& rel = x.group->relation_lattice().hnf_basis();
    std::vector<std::vector<Int>> rows;
    rows.push_back(x.exponents);
    std::vector<Int> minus_q(m, Int(0));
    minus_q[ConstGroup::q_index] = -1;
    rows.push_back(std::move(minus_q));
    for (std::size_t i = 0; i < rel.rows(); ++i) rows.push_back(rel.row(i));
    auto kernel = integer_kernel(IntMatrix::from_rows(rows).transposed());
    std::vector<std::vector<Int>> projections;
    for (const auto& w : kernel) projections.push_back({w[0], w[1]});
    if (projections.empty()) return std::nullopt;
    HnfDecomposition h = hermite_normal_form(IntMatrix::from_rows(projections));
    if (h.rank() == 0) return std::nullopt;
    if (h.rank() == 1) {
        Int u = h.h.at(0, 0), v = h.h.at(0, 1);
        if (u == 0 || v == 0) return std::nullopt;
        return std::make_pair(u, v);
    }
    // Rank 2: rows (a, b), (0, c); pick (a, b) when b != 0, else (a, c).
    Int a = h.h.at(0, 0), b = h.h.at(0, 1), c = h.h.at(1, 1);
    if (b != 0) return std::make_pair(a, b);
    return std::make_pair(a, c);
}

LambdaClass classify_lambda(const ConstElem& lambda, const Int& T) {
    if (T != 0) return LambdaClass{CaseTag::case2, std::nullopt, std::nullopt};
    if (auto uv = q_power_relation(lambda)) return LambdaClass{CaseTag::case1, uv, std::nullopt};
    if (auto w = element_order(lambda)) return LambdaClass{CaseTag::case1, std::nullopt, w};
    return LambdaClass{CaseTag::case2, std::nullopt, std::nullopt};
}

}  // namespace qsigma
