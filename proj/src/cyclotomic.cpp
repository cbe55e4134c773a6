#include "qsigma/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsigma {

unsigned euler_phi(unsigned t) {
    if (t == 0) throw std::invalid_argument("euler_phi: t must be positive");
    unsigned result = t;
    unsigned n = t;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, divisor monic. Low degree first.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (std::size_t i = dn + 1; i-- > dd;) {
        Int c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

std::vector<Int> compute_cyclotomic(unsigned t) {
    // x^t - 1 divided by Phi_d for all proper divisors d of t.
    std::vector<Int> poly(t + 1, Int(0));
    poly[0] = -1;
    poly[t] = 1;
    for (unsigned d = 1; d < t; ++d)
        if (t % d == 0) poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    return poly;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned t) {
    if (t == 0) throw std::invalid_argument("cyclotomic_polynomial: t must be positive");
    static std::map<unsigned, std::vector<Int>> cache;
    // compute_cyclotomic re-enters for the divisors of t
    static std::recursive_mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, compute_cyclotomic(t)).first;
    return it->second;
}

CycNum::CycNum(unsigned t) : t_(t), c_(euler_phi(t), Rat(0)) {
    if (t == 0) throw std::invalid_argument("CycNum: t must be positive");
}

CycNum::CycNum(unsigned t, const Rat& value) : CycNum(t) { c_[0] = value; }

CycNum CycNum::zeta_pow(unsigned t, long k) {
    long r = k % static_cast<long>(t);
    if (r < 0) r += t;
    std::vector<Rat> poly(static_cast<std::size_t>(r) + 1, Rat(0));
    poly.back() = 1;
    return reduce(t, std::move(poly));
}

CycNum CycNum::reduce(unsigned t, std::vector<Rat> poly) {
    CycNum out(t);
    const std::vector<Int>& phi = cyclotomic_polynomial(t);
    const std::size_t deg = phi.size() - 1;
    // Phi_t is monic: x^deg == -sum_{j<deg} phi[j] x^j.
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rat c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rat(phi[j]);
    }
    for (std::size_t j = 0; j < deg && j < poly.size(); ++j) {
        poly[j].canonicalize();
        out.c_[j] = poly[j];
    }
    return out;
}

bool CycNum::is_zero() const {
    for (const Rat& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycNum::rational_value: value not rational");
    return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
    CycNum r = *this;
    r += o;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (t_ != o.t_) throw std::invalid_argument("CycNum: mixed cyclotomic orders");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (t_ != o.t_) throw std::invalid_argument("CycNum: mixed cyclotomic orders");
    std::vector<Rat> conv(2 * c_.size(), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
    }
    return reduce(t_, std::move(conv));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::operator*(const Rat& r) const {
    CycNum out = *this;
    for (Rat& c : out.c_) c *= r;
    return out;
}

bool CycNum::operator==(const CycNum& o) const { return t_ == o.t_ && c_ == o.c_; }

CycNum CycNum::galois(long j) const {
    CycNum out(t_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out += zeta_pow(t_, j * static_cast<long>(i)) * c_[i];
    }
    return out;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        Rat a = c_[j];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (j == 0 || a != 1) os << a.get_str();
        if (j > 0) {
            if (a != 1) os << "*";
            os << "z";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace qsigma
