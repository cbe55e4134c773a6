#include "qsigma/ratfun.hpp"

#include <sstream>
#include <stdexcept>

namespace qsigma {

namespace {

void check_compatible(const FactoredRatFun& f, const FactoredRatFun& g) {
    if (f.group_ptr() != g.group_ptr() && !(*f.group_ptr() == *g.group_ptr()))
        throw std::invalid_argument("factored functions over different constant groups");
    if (f.orbit_names() != g.orbit_names())
        throw std::invalid_argument("factored functions over different orbit tables");
}

}  // namespace

FactoredRatFun::FactoredRatFun(std::shared_ptr<const ConstGroup> group, std::vector<std::string> orbit_names)
    : group_(std::move(group)), orbit_names_(std::move(orbit_names)), z_power_(0) {
    if (!group_) throw std::invalid_argument("FactoredRatFun: null group");
    constant_ = group_->one();
}

void FactoredRatFun::set_constant(ConstElem c) {
    if (c.group != group_ && !(*c.group == *group_))
        throw std::invalid_argument("FactoredRatFun: constant from a different group");
    constant_ = std::move(c);
}

void FactoredRatFun::multiply_constant(const ConstElem& c) { constant_ = const_mul(constant_, c); }

void FactoredRatFun::add_factor(std::size_t orbit, long long k, long long d, const Int& s) {
    if (orbit >= orbit_names_.size()) throw std::invalid_argument("FactoredRatFun: orbit index out of range");
    if (s == 0) return;
    long long kk = k % static_cast<long long>(t());
    if (kk < 0) kk += t();
    RootRef key{orbit, static_cast<unsigned>(kk), d};
    auto it = factors_.find(key);
    if (it == factors_.end()) {
        factors_.emplace(key, s);
    } else {
        it->second += s;
        if (it->second == 0) factors_.erase(it);
    }
}

Int FactoredRatFun::total_factor_exponent() const {
    Int sum = 0;
    for (const auto& [ref, s] : factors_) sum += s;
    return sum;
}

std::string FactoredRatFun::to_string() const {
    std::ostringstream os;
    bool any = false;
    ConstElem c = const_canonical(constant_);
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
        if (c.exponents[i] == 0) continue;
        if (any) os << " * ";
        os << group_->generator_names()[i];
        if (c.exponents[i] != 1) os << "^" << c.exponents[i].get_str();
        any = true;
    }
    if (z_power_ != 0) {
        if (any) os << " * ";
        os << "z";
        if (z_power_ != 1) os << "^" << z_power_.get_str();
        any = true;
    }
    for (const auto& [ref, s] : factors_) {
        if (any) os << " * ";
        os << "(z - ";
        if (ref.zeta_exp != 0) os << "zeta" << (ref.zeta_exp == 1 ? "" : "^" + std::to_string(ref.zeta_exp)) << "*";
        if (ref.q_exp != 0) os << "q" << (ref.q_exp == 1 ? "" : "^" + std::to_string(ref.q_exp)) << "*";
        os << orbit_names_[ref.orbit] << ")";
        if (s != 1) os << "^" << s.get_str();
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

FactoredRatFun apply_sigma_q(const FactoredRatFun& f) {
    FactoredRatFun r(f.group_ptr(), f.orbit_names());
    r.set_z_power(f.z_power());
    for (const auto& [ref, s] : f.factors()) r.add_factor(ref.orbit, ref.zeta_exp, ref.q_exp - 1, s);
    ConstElem c = const_mul(f.constant(), f.group_ptr()->q_power(f.z_power() + f.total_factor_exponent()));
    r.set_constant(std::move(c));
    return r;
}

FactoredRatFun apply_sigma_zeta(const FactoredRatFun& f, long long rot) {
    const long long t = f.t();
    long long r = rot % t;
    if (r < 0) r += t;
    FactoredRatFun out(f.group_ptr(), f.orbit_names());
    out.set_z_power(f.z_power());
    for (const auto& [ref, s] : f.factors())
        out.add_factor(ref.orbit, static_cast<long long>(ref.zeta_exp) - r, ref.q_exp, s);
    ConstElem c = const_mul(
        f.constant(), f.group_ptr()->zeta_power(Int(static_cast<long>(r)) * (f.z_power() + f.total_factor_exponent())));
    out.set_constant(std::move(c));
    return out;
}

FactoredRatFun combine(const FactoredRatFun& f, const FactoredRatFun& g, const Int& exp_f, const Int& exp_g) {
    check_compatible(f, g);
    FactoredRatFun r(f.group_ptr(), f.orbit_names());
    r.set_z_power(exp_f * f.z_power() + exp_g * g.z_power());
    r.set_constant(const_mul(const_pow(f.constant(), exp_f), const_pow(g.constant(), exp_g)));
    for (const auto& [ref, s] : f.factors()) r.add_factor(ref.orbit, ref.zeta_exp, ref.q_exp, exp_f * s);
    for (const auto& [ref, s] : g.factors()) r.add_factor(ref.orbit, ref.zeta_exp, ref.q_exp, exp_g * s);
    return r;
}

FactoredRatFun ratfun_pow(const FactoredRatFun& f, const Int& e) {
    FactoredRatFun one(f.group_ptr(), f.orbit_names());
    return combine(f, one, e, Int(0));
}

FactoredRatFun apply_phi(const MultFunction& phi, const FactoredRatFun& f) {
    const unsigned t = f.t();
    if (phi.length() != t) throw std::invalid_argument("apply_phi: exponent vector length differs from t");
    Int n_total = 0, n_weighted = 0;
    for (unsigned r = 0; r < t; ++r) {
        n_total += phi.n[r];
        n_weighted += Int(r) * phi.n[r];
    }
    FactoredRatFun out(f.group_ptr(), f.orbit_names());
    out.set_z_power(f.z_power() * n_total);
    ConstElem c = const_pow(f.constant(), n_total);
    c = const_mul(c, f.group_ptr()->zeta_power((f.z_power() + f.total_factor_exponent()) * n_weighted));
    out.set_constant(std::move(c));
    // Factor exponent of the result at k is sum_r n_r * s_{k+r,d,i}; the
    // input factor at k thus lands at k - r for every r.
    for (const auto& [ref, s] : f.factors())
        for (unsigned r = 0; r < t; ++r) {
            if (phi.n[r] == 0) continue;
            out.add_factor(ref.orbit, static_cast<long long>(ref.zeta_exp) - r, ref.q_exp, phi.n[r] * s);
        }
    return out;
}

FactoredRatFun sigma_q_ratio(const FactoredRatFun& b) { return combine(apply_sigma_q(b), b, Int(1), Int(-1)); }

bool ratfun_equal(const FactoredRatFun& f, const FactoredRatFun& g) {
    check_compatible(f, g);
    return f.z_power() == g.z_power() && f.factors() == g.factors() &&
           const_equal(f.constant(), g.constant());
}

}  // namespace qsigma
