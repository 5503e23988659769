#pragma once

#include "qmirror/rational.hpp"

#include <compare>
#include <map>
#include <string>

namespace qmirror {

/// Monomial key (2 pi i)^power * zeta(3)^zeta3 with zeta3 in {0, 1}.
struct ConstKey {
    int two_pi_i_pow = 0;
    int zeta3 = 0;

    auto operator<=>(const ConstKey&) const = default;
};

/// Element of Q[(2 pi i)^{+-1}] + zeta(3) Q[(2 pi i)^{+-1}].
///
/// Every transcendental constant of the period computations lives here:
/// pi^2 = -(2 pi i)^2 / 4, zeta(2) = -(2 pi i)^2 / 24, and odd powers of pi
/// carry a factor of i through (2 pi i)^odd. Products that would need
/// zeta(3)^2 throw DomainOverflow. No stored coefficient is zero.
class ConstScalar {
public:
    using Terms = std::map<ConstKey, Rational>;

    ConstScalar() = default;
    ConstScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
    ConstScalar(long n);             // NOLINT(google-explicit-constructor)

    static ConstScalar monomial(int two_pi_i_pow, int zeta3, const Rational& coeff);
    static ConstScalar two_pi_i(int power = 1) { return monomial(power, 0, 1); }
    static ConstScalar zeta3() { return monomial(0, 1, 1); }
    static ConstScalar zeta2() { return monomial(2, 0, make_rational(-1, 24)); }
    static ConstScalar pi_squared() { return monomial(2, 0, make_rational(-1, 4)); }
    static ConstScalar inv_pi_squared() { return monomial(-2, 0, -4); }
    /// i zeta(3) / pi^3 = 8 zeta(3) (2 pi i)^{-3}.
    static ConstScalar i_zeta3_over_pi_cubed() { return monomial(-3, 1, 8); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Throws Inconsistency when the value is not a plain rational.
    Rational as_rational() const;
    Rational coeff(int two_pi_i_pow, int zeta3) const;

    /// Monomial inverse: ((2 pi i)^a r)^{-1} = (2 pi i)^{-a} r^{-1}.
    ConstScalar inverse() const;

    ConstScalar operator-() const;
    ConstScalar& operator+=(const ConstScalar& o);
    ConstScalar& operator-=(const ConstScalar& o);
    ConstScalar& operator*=(const ConstScalar& o);
    ConstScalar& operator*=(const Rational& r);

    friend ConstScalar operator+(ConstScalar a, const ConstScalar& b) { return a += b; }
    friend ConstScalar operator-(ConstScalar a, const ConstScalar& b) { return a -= b; }
    friend ConstScalar operator*(const ConstScalar& a, const ConstScalar& b);
    friend bool operator==(const ConstScalar& a, const ConstScalar& b) { return a.terms_ == b.terms_; }

    /// Human readable, e.g. "15/4*(2pi i)^-2 - 8*zeta3*(2pi i)^-3".
    std::string to_string() const;

private:
    void add_term(const ConstKey& key, const Rational& value);

    Terms terms_;
};

}  // namespace qmirror
