#include "qmirror/const_scalar.hpp"

#include "qmirror/error.hpp"

#include <sstream>

namespace qmirror {

ConstScalar::ConstScalar(const Rational& r) {
    if (r != 0) terms_.emplace(ConstKey{}, r);
}

ConstScalar::ConstScalar(long n) {
    if (n != 0) terms_.emplace(ConstKey{}, Rational(n));
}

ConstScalar ConstScalar::monomial(int two_pi_i_pow, int zeta3, const Rational& coeff) {
    if (zeta3 != 0 && zeta3 != 1) fail(ErrorKind::DomainOverflow, "zeta(3) exponent must be 0 or 1");
    ConstScalar out;
    out.add_term({two_pi_i_pow, zeta3}, coeff);
    return out;
}

bool ConstScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ConstKey{});
}

Rational ConstScalar::as_rational() const {
    if (!is_rational()) fail(ErrorKind::Inconsistency, "expected a rational constant, got " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational ConstScalar::coeff(int two_pi_i_pow, int zeta3) const {
    auto it = terms_.find({two_pi_i_pow, zeta3});
    return it == terms_.end() ? Rational(0) : it->second;
}

ConstScalar ConstScalar::inverse() const {
    if (!is_monomial()) fail(ErrorKind::Unsupported, "inverse of non-monomial constant " + to_string());
    const auto& [key, value] = *terms_.begin();
    if (key.zeta3 != 0) fail(ErrorKind::Unsupported, "inverse of a zeta(3) term");
    return monomial(-key.two_pi_i_pow, 0, Rational(1 / value));
}

void ConstScalar::add_term(const ConstKey& key, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

ConstScalar ConstScalar::operator-() const {
    ConstScalar out(*this);
    for (auto& [k, v] : out.terms_) v = -v;
    return out;
}

ConstScalar& ConstScalar::operator+=(const ConstScalar& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

ConstScalar& ConstScalar::operator-=(const ConstScalar& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, Rational(-v));
    return *this;
}

ConstScalar& ConstScalar::operator*=(const ConstScalar& o) {
    *this = *this * o;
    return *this;
}

ConstScalar& ConstScalar::operator*=(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= r;
    return *this;
}

ConstScalar operator*(const ConstScalar& a, const ConstScalar& b) {
    ConstScalar out;
    if (a.is_zero() || b.is_zero()) return out;
    // Fast path for the common rational * rational case.
    if (a.is_rational() && b.is_rational()) {
        out.terms_.emplace(ConstKey{}, Rational(a.terms_.begin()->second * b.terms_.begin()->second));
        return out;
    }
    for (const auto& [ka, va] : a.terms_) {
        for (const auto& [kb, vb] : b.terms_) {
            int z = ka.zeta3 + kb.zeta3;
            if (z > 1) fail(ErrorKind::DomainOverflow, "product requires zeta(3)^2");
            out.add_term({ka.two_pi_i_pow + kb.two_pi_i_pow, z}, Rational(va * vb));
        }
    }
    return out;
}

std::string ConstScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        first = false;
        Rational mag = abs(v);
        os << mag.get_str();
        if (k.zeta3) os << "*zeta3";
        if (k.two_pi_i_pow == 1) os << "*(2pi i)";
        else if (k.two_pi_i_pow != 0) os << "*(2pi i)^" << k.two_pi_i_pow;
    }
    return os.str();
}

}  // namespace qmirror
