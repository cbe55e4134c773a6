#include "qsigma/pseudofield.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsigma {

std::size_t FinAbGroup::size() const {
    std::size_t s = 1;
    for (unsigned o : orders) s *= o;
    return s;
}

std::size_t FinAbGroup::index(const std::vector<unsigned>& element) const {
    if (element.size() != orders.size()) throw std::invalid_argument("FinAbGroup: element arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (element[i] >= orders[i]) throw std::invalid_argument("FinAbGroup: exponent out of range");
        idx = idx * orders[i] + element[i];
    }
    return idx;
}

std::vector<unsigned> FinAbGroup::element(std::size_t index) const {
    std::vector<unsigned> e(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
        e[i] = static_cast<unsigned>(index % orders[i]);
        index /= orders[i];
    }
    return e;
}

std::vector<unsigned> FinAbGroup::add(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (a[i] + b[i]) % orders[i];
    return r;
}

std::vector<unsigned> FinAbGroup::inverse(const std::vector<unsigned>& a) const {
    std::vector<unsigned> r(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) r[i] = (orders[i] - a[i]) % orders[i];
    return r;
}

namespace {

long normalize_aut(long a, unsigned m) {
    if (m == 1) return 1;
    long r = a % static_cast<long>(m);
    if (r < 0) r += m;
    if (std::gcd(r, static_cast<long>(m)) != 1)
        throw std::invalid_argument("pseudofield: Galois exponent not coprime to the base order");
    return r;
}

PfAction compose(const PfAction& g, const PfAction& h, unsigned m) {  // g after h
    const std::size_t n = g.perm.size();
    PfAction c{std::vector<std::size_t>(n), std::vector<long>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        c.perm[i] = g.perm[h.perm[i]];
        c.aut[i] = normalize_aut(h.aut[i] * g.aut[h.perm[i]], m);
    }
    return c;
}

bool is_identity(const PfAction& a) {
    for (std::size_t i = 0; i < a.perm.size(); ++i)
        if (a.perm[i] != i || a.aut[i] != 1) return false;
    return true;
}

PfAction identity_action(std::size_t n) {
    PfAction a{std::vector<std::size_t>(n), std::vector<long>(n, 1)};
    for (std::size_t i = 0; i < n; ++i) a.perm[i] = i;
    return a;
}

}  // namespace

Pseudofield::Pseudofield(unsigned base_order, std::size_t components)
    : base_order_(base_order), n_(components) {
    if (base_order_ < 1) throw std::invalid_argument("Pseudofield: base order must be positive");
    if (n_ < 1) throw std::invalid_argument("Pseudofield: at least one component required");
}

void Pseudofield::validate_action(const PfAction& a, unsigned order) const {
    if (a.perm.size() != n_ || a.aut.size() != n_)
        throw std::invalid_argument("Pseudofield: action arity mismatch");
    std::vector<bool> seen(n_, false);
    for (std::size_t p : a.perm) {
        if (p >= n_ || seen[p]) throw std::invalid_argument("Pseudofield: action is not a permutation");
        seen[p] = true;
    }
    for (long e : a.aut) normalize_aut(e, base_order_);
    if (order > 0) {
        PfAction power = identity_action(n_);
        for (unsigned i = 0; i < order; ++i) power = compose(a, power, base_order_);
        if (!is_identity(power))
            throw std::invalid_argument("Pseudofield: generator does not respect its declared order");
    }
    // The acting group is abelian: the new generator must commute with the
    // declared ones.
    std::vector<const PfAction*> others;
    if (sigma_) others.push_back(&*sigma_);
    for (const auto& [g, o] : sigma1_) others.push_back(&g);
    for (const PfAction* b : others) {
        PfAction ab = compose(a, *b, base_order_);
        PfAction ba = compose(*b, a, base_order_);
        if (!(ab.perm == ba.perm && ab.aut == ba.aut))
            throw std::invalid_argument("Pseudofield: generator actions do not commute");
    }
}

void Pseudofield::set_sigma(PfAction action) {
    for (long& e : action.aut) e = normalize_aut(e, base_order_);
    validate_action(action, 0);
    sigma_ = std::move(action);
}

std::size_t Pseudofield::add_sigma1_generator(PfAction action, unsigned order) {
    if (order < 1) throw std::invalid_argument("Pseudofield: generator order must be positive");
    for (long& e : action.aut) e = normalize_aut(e, base_order_);
    validate_action(action, order);
    sigma1_.emplace_back(std::move(action), order);
    return sigma1_.size() - 1;
}

const PfAction& Pseudofield::sigma() const {
    if (!sigma_) throw std::logic_error("Pseudofield: sigma action not declared");
    return *sigma_;
}

PfElement Pseudofield::zero() const { return PfElement(n_, CycNum(base_order_)); }

PfElement Pseudofield::one() const { return PfElement(n_, CycNum(base_order_, Rat(1))); }

PfElement Pseudofield::indicator(std::size_t component) const {
    PfElement e = zero();
    e.at(component) = CycNum(base_order_, Rat(1));
    return e;
}

PfElement Pseudofield::from_components(std::vector<CycNum> coords) const {
    if (coords.size() != n_) throw std::invalid_argument("Pseudofield: component count mismatch");
    for (const CycNum& c : coords)
        if (c.order() != base_order_) throw std::invalid_argument("Pseudofield: wrong base field");
    return coords;
}

PfElement Pseudofield::add(const PfElement& a, const PfElement& b) const {
    PfElement r = a;
    for (std::size_t i = 0; i < n_; ++i) r[i] += b[i];
    return r;
}

PfElement Pseudofield::mul(const PfElement& a, const PfElement& b) const {
    PfElement r = a;
    for (std::size_t i = 0; i < n_; ++i) r[i] *= b[i];
    return r;
}

bool Pseudofield::equal(const PfElement& a, const PfElement& b) const { return a == b; }

PfElement Pseudofield::apply(const PfAction& g, const PfElement& x) const {
    PfElement r = zero();
    for (std::size_t c = 0; c < n_; ++c) r[g.perm[c]] = x[c].galois(g.aut[c]);
    return r;
}

PfElement Pseudofield::apply_sigma(const PfElement& x) const { return apply(sigma(), x); }

PfElement Pseudofield::apply_sigma1(std::size_t gen, const PfElement& x) const {
    return apply(sigma1_.at(gen).first, x);
}

PfElement Pseudofield::apply_sigma1_word(const std::vector<unsigned>& exponents, const PfElement& x) const {
    if (exponents.size() != sigma1_.size())
        throw std::invalid_argument("Pseudofield: word arity mismatch");
    PfElement r = x;
    for (std::size_t g = 0; g < exponents.size(); ++g)
        for (unsigned i = 0; i < exponents[g]; ++i) r = apply_sigma1(g, r);
    return r;
}

FSigma1 f_sigma1(unsigned base_order, const std::vector<unsigned>& cyclic_orders, long base_sigma_aut) {
    for (unsigned o : cyclic_orders)
        if (o < 1) throw std::invalid_argument("f_sigma1: cyclic orders must be positive");
    FinAbGroup group{cyclic_orders};
    const std::size_t n = group.size();
    Pseudofield pf(base_order, n);
    PfAction sigma = identity_action(n);
    for (long& e : sigma.aut) e = base_sigma_aut;
    pf.set_sigma(std::move(sigma));
    for (std::size_t g = 0; g < cyclic_orders.size(); ++g) {
        // Translation action: (mu f)(tau) = f(mu^{-1} tau), so the value at
        // tau moves to mu + tau.
        PfAction act = identity_action(n);
        std::vector<unsigned> mu(cyclic_orders.size(), 0);
        mu[g] = 1 % cyclic_orders[g];
        for (std::size_t c = 0; c < n; ++c) act.perm[c] = group.index(group.add(mu, group.element(c)));
        pf.add_sigma1_generator(std::move(act), cyclic_orders[g]);
    }
    return FSigma1{std::move(pf), std::move(group)};
}

CycNum gamma_mu(const FSigma1& f, const std::vector<unsigned>& mu, const PfElement& x) {
    return x.at(f.group.index(mu));
}

namespace {

FSigma1 taylor_codomain(const Pseudofield& domain, long base_sigma_aut) {
    std::vector<unsigned> orders;
    for (std::size_t g = 0; g < domain.sigma1_count(); ++g) orders.push_back(domain.sigma1_order(g));
    return f_sigma1(domain.base_order(), orders, base_sigma_aut);
}

}  // namespace

TaylorHom::TaylorHom(const Pseudofield& domain, ScalarHom phi, std::vector<unsigned> mu, long base_sigma_aut)
    : domain_(domain), phi_(phi), mu_(std::move(mu)), codomain_(taylor_codomain(domain, base_sigma_aut)) {
    if (phi_.component >= domain.components())
        throw std::invalid_argument("TaylorHom: component out of range");
    if (mu_.size() != domain.sigma1_count()) throw std::invalid_argument("TaylorHom: mu arity mismatch");
    codomain_.group.index(mu_);  // range check
    // phi must intertwine sigma on A with sigma on B; checked on the
    // component basis of A.
    for (std::size_t c = 0; c < domain.components(); ++c)
        for (unsigned j = 0; j < euler_phi(domain.base_order()); ++j) {
            PfElement b = domain.zero();
            b[c] = CycNum::zeta_pow(domain.base_order(), j);
            CycNum lhs = this->phi(domain.apply_sigma(b));
            CycNum rhs = this->phi(b).galois(base_sigma_aut);
            if (!(lhs == rhs))
                throw std::invalid_argument("TaylorHom: phi is not a sigma-homomorphism on the basis");
        }
}

CycNum TaylorHom::phi(const PfElement& a) const { return a.at(phi_.component).galois(phi_.aut_exp); }

PfElement TaylorHom::operator()(const PfElement& a) const {
    const FinAbGroup& g = codomain_.group;
    PfElement out = codomain_.pf.zero();
    for (std::size_t c = 0; c < codomain_.pf.components(); ++c) {
        std::vector<unsigned> tau = g.element(c);
        std::vector<unsigned> word = g.add(mu_, g.inverse(tau));
        out[c] = phi(domain_.apply_sigma1_word(word, a));
    }
    return out;
}

namespace {

/// Matrix of a PfAction over the Q-basis indicator_c * zeta^j (column-major
/// action on coordinates: column (c,j) holds the image coordinates).
IntMatrix action_matrix(const Pseudofield& pf, const PfAction& g) {
    const unsigned deg = euler_phi(pf.base_order());
    const std::size_t dim = pf.components() * deg;
    IntMatrix m(dim, dim);
    for (std::size_t c = 0; c < pf.components(); ++c)
        for (unsigned j = 0; j < deg; ++j) {
            CycNum image = CycNum::zeta_pow(pf.base_order(), static_cast<long>(j) * g.aut[c]);
            for (unsigned i = 0; i < deg; ++i) {
                const Rat& coeff = image.coeffs()[i];
                if (coeff.get_den() != 1) throw std::logic_error("action matrix not integral");
                m.at(g.perm[c] * deg + i, c * deg + j) = coeff.get_num();
            }
        }
    return m;
}

std::vector<Rat> element_coordinates(const Pseudofield& pf, const PfElement& x) {
    const unsigned deg = euler_phi(pf.base_order());
    std::vector<Rat> v(pf.components() * deg);
    for (std::size_t c = 0; c < pf.components(); ++c)
        for (unsigned j = 0; j < deg; ++j) v[c * deg + j] = x[c].coeffs()[j];
    return v;
}

std::vector<const PfAction*> selected_generators(const Pseudofield& pf, bool include_sigma,
                                                 const std::vector<std::size_t>& sigma1_gens) {
    std::vector<const PfAction*> gens;
    if (include_sigma) gens.push_back(&pf.sigma());
    for (std::size_t g : sigma1_gens) gens.push_back(&pf.sigma1_generator(g));
    return gens;
}

/// Rational span membership with coefficients, over integer basis rows.
std::optional<std::vector<Rat>> span_solve(const Lattice& span, const std::vector<Rat>& x) {
    // Clear denominators: x = y / d with y integral.
    Int d = 1;
    for (const Rat& c : x) d = int_lcm(d, c.get_den());
    std::vector<Int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i].get_num() * (d / x[i].get_den());
    auto sol = span.rational_solve(y);
    if (!sol) return std::nullopt;
    for (Rat& c : *sol) c /= Rat(d);
    return sol;
}

}  // namespace

ConstantsReport constants_subring(const Pseudofield& pf, bool include_sigma,
                                  const std::vector<std::size_t>& sigma1_gens) {
    const unsigned deg = euler_phi(pf.base_order());
    const std::size_t dim = pf.components() * deg;
    std::vector<const PfAction*> gens = selected_generators(pf, include_sigma, sigma1_gens);

    std::vector<std::vector<Int>> stacked;
    for (const PfAction* g : gens) {
        IntMatrix m = action_matrix(pf, *g);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Int> row(dim);
            for (std::size_t j = 0; j < dim; ++j) row[j] = m.at(i, j) - (i == j ? 1 : 0);
            stacked.push_back(std::move(row));
        }
    }

    std::vector<std::vector<Int>> kernel;
    if (stacked.empty()) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Int> e(dim, Int(0));
            e[j] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = integer_kernel(IntMatrix::from_rows(stacked));
    }

    ConstantsReport report;
    report.dimension_over_q = kernel.size();
    for (const auto& v : kernel) {
        PfElement x = pf.zero();
        for (std::size_t c = 0; c < pf.components(); ++c) {
            std::vector<Rat> coeffs(deg);
            for (unsigned j = 0; j < deg; ++j) coeffs[j] = Rat(v[c * deg + j]);
            x[c] = CycNum::reduce(pf.base_order(), std::move(coeffs));
        }
        report.basis.push_back(std::move(x));
    }
    if (kernel.empty()) return report;

    Lattice span(dim, kernel);

    // Closure under multiplication by zeta decides whether the subring is a
    // module over the base field.
    bool base_module = true;
    if (deg > 1) {
        const CycNum zeta = CycNum::zeta_pow(pf.base_order(), 1);
        for (const PfElement& b : report.basis) {
            PfElement zb = b;
            for (CycNum& c : zb) c *= zeta;
            if (!span_solve(span, element_coordinates(pf, zb))) {
                base_module = false;
                break;
            }
        }
    }
    if (base_module) report.dimension_over_base = report.dimension_over_q / deg;

    // Idempotents of the subring are the 0/1 component indicators inside the
    // span; they are unions of the value-equality classes of the basis.
    std::vector<std::size_t> class_of(pf.components());
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t c = 0; c < pf.components(); ++c) {
        bool placed = false;
        for (std::size_t k = 0; k < classes.size() && !placed; ++k) {
            const std::size_t rep = classes[k][0];
            bool same = true;
            for (const PfElement& b : report.basis)
                if (!(b[c] == b[rep])) {
                    same = false;
                    break;
                }
            if (same) {
                classes[k].push_back(c);
                class_of[c] = k;
                placed = true;
            }
        }
        if (!placed) {
            classes.push_back({c});
            class_of[c] = classes.size() - 1;
        }
    }
    if (classes.size() > 20) throw std::invalid_argument("constants_subring: too many components");
    std::vector<std::vector<bool>> idempotents;
    for (std::size_t mask = 1; mask < (std::size_t(1) << classes.size()); ++mask) {
        std::vector<bool> sel(pf.components(), false);
        for (std::size_t k = 0; k < classes.size(); ++k)
            if (mask & (std::size_t(1) << k))
                for (std::size_t c : classes[k]) sel[c] = true;
        std::vector<Rat> coords(dim, Rat(0));
        for (std::size_t c = 0; c < pf.components(); ++c)
            if (sel[c]) coords[c * deg] = 1;
        if (span_solve(span, coords)) idempotents.push_back(std::move(sel));
    }
    // Count the minimal (indecomposable) ones.
    for (const auto& e : idempotents) {
        bool minimal = true;
        for (const auto& f : idempotents) {
            if (f == e) continue;
            bool subset = true, nonzero = false;
            for (std::size_t c = 0; c < e.size(); ++c) {
                if (f[c] && !e[c]) subset = false;
                if (f[c]) nonzero = true;
            }
            if (subset && nonzero) {
                minimal = false;
                break;
            }
        }
        if (minimal) ++report.indecomposable_idempotents;
    }

    // Multiplication table of the basis.
    for (const PfElement& bi : report.basis)
        for (const PfElement& bj : report.basis) {
            PfElement prod = pf.mul(bi, bj);
            auto coords = span_solve(span, element_coordinates(pf, prod));
            if (!coords) {
                report.mult_table.clear();
                return report;
            }
            report.mult_table.push_back(std::move(*coords));
        }
    return report;
}

bool is_simple(const Pseudofield& pf, bool include_sigma, const std::vector<std::size_t>& sigma1_gens) {
    std::vector<const PfAction*> gens = selected_generators(pf, include_sigma, sigma1_gens);
    std::vector<bool> reached(pf.components(), false);
    std::vector<std::size_t> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
        std::size_t c = queue.back();
        queue.pop_back();
        for (const PfAction* g : gens) {
            std::size_t forward = g->perm[c];
            std::size_t backward = 0;
            while (g->perm[backward] != c) ++backward;
            for (std::size_t next : {forward, backward}) {
                if (!reached[next]) {
                    reached[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

}  // namespace qsigma
