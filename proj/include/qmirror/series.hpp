#pragma once

#include "qmirror/const_scalar.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace qmirror {

enum class Var { z, q };

const char* to_string(Var v);

/// Truncated series sum_{m,k} c_{m,k} x^{m/2} (log x)^k with 0 <= k <= 3.
///
/// Exponents are stored doubled (m2 = 2 * exponent) so that x^{1/2} is exact.
/// A series of order2 N carries every coefficient with m2 <= N exactly;
/// nothing is known beyond. Binary operations return the smaller order.
/// order2 == kExact marks a polynomial known exactly (e.g. 1 - z).
class HalfLogSeries {
public:
    static constexpr int kMaxLog = 3;
    static constexpr int kExact = 1 << 28;

    using Coeffs = std::array<ConstScalar, kMaxLog + 1>;

    HalfLogSeries() = default;
    HalfLogSeries(Var var, int order2);

    static HalfLogSeries monomial(Var var, int m2, int logpow, const ConstScalar& c, int order2 = kExact);
    static HalfLogSeries constant(Var var, const ConstScalar& c, int order2 = kExact);
    /// sum_n coeffs[n] x^n with integer exponents; order2 = 2 * (size - 1) unless given.
    static HalfLogSeries from_integer_coeffs(Var var, std::span<const Rational> coeffs, int order2 = -1);

    Var var() const { return var_; }
    int order2() const { return order2_; }
    bool is_exact() const { return order2_ >= kExact; }
    /// Highest stored m2 plus one (zero series: 0).
    int extent() const { return static_cast<int>(c_.size()); }

    const ConstScalar& coeff(int m2, int logpow = 0) const;
    void set(int m2, int logpow, const ConstScalar& value);
    void add_to(int m2, int logpow, const ConstScalar& value);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero series.
    int log_degree() const;
    bool has_logs() const { return log_degree() > 0; }
    bool has_integer_support() const;
    bool has_half_odd_support() const;
    bool has_rational_coeffs() const;

    HalfLogSeries truncated(int order2) const;
    HalfLogSeries with_var(Var var) const;
    /// Coefficient of (log x)^k as a log-free series.
    HalfLogSeries log_part(int logpow) const;
    /// Multiplies by x^{shift2/2}; shift2 may be negative when no coefficient underflows.
    HalfLogSeries shifted(int shift2) const;

    HalfLogSeries operator-() const;
    HalfLogSeries& operator+=(const HalfLogSeries& o);
    HalfLogSeries& operator-=(const HalfLogSeries& o);
    HalfLogSeries& operator*=(const ConstScalar& c);

    friend HalfLogSeries operator+(HalfLogSeries a, const HalfLogSeries& b) { return a += b; }
    friend HalfLogSeries operator-(HalfLogSeries a, const HalfLogSeries& b) { return a -= b; }
    friend HalfLogSeries operator*(const HalfLogSeries& a, const HalfLogSeries& b);
    friend HalfLogSeries operator*(HalfLogSeries a, const ConstScalar& c) { return a *= c; }
    friend HalfLogSeries operator*(const ConstScalar& c, HalfLogSeries a) { return a *= c; }

    /// Same variable, same order and identical coefficients.
    friend bool operator==(const HalfLogSeries& a, const HalfLogSeries& b);

    std::string to_string() const;

private:
    void trim();
    void check_compatible(const HalfLogSeries& o) const;

    Var var_ = Var::z;
    int order2_ = 0;
    std::vector<Coeffs> c_;
};

/// Coefficientwise equality for every m2 <= min(a.order2, b.order2, order2).
bool agree_to_order(const HalfLogSeries& a, const HalfLogSeries& b, int order2 = HalfLogSeries::kExact);

/// theta = x d/dx acting by theta(x^a L^k) = a x^a L^k + k x^a L^{k-1}.
HalfLogSeries theta(const HalfLogSeries& f);

/// 1/f for a log-free f whose lowest coefficient (at m2 = 0) is an invertible monomial.
/// The result order is min(f.order2, max_order2) and must be finite.
HalfLogSeries series_invert(const HalfLogSeries& f, int max_order2 = HalfLogSeries::kExact);

/// exp(f) for log-free f with f(0) = 0.
HalfLogSeries series_exp(const HalfLogSeries& f, int max_order2 = HalfLogSeries::kExact);

/// log(f) for log-free f with f(0) = 1.
HalfLogSeries series_log(const HalfLogSeries& f, int max_order2 = HalfLogSeries::kExact);

/// f^alpha = exp(alpha log f) for a log-free unit series with f(0) = 1.
HalfLogSeries series_power(const HalfLogSeries& f, const Rational& alpha, int max_order2 = HalfLogSeries::kExact);

/// f(g(x)) for log-free f, g with integer exponents and g(0) = 0.
HalfLogSeries series_compose(const HalfLogSeries& f, const HalfLogSeries& g);

/// Compositional inverse of f = c1 x + c2 x^2 + ... (integer exponents, c1 an invertible monomial).
HalfLogSeries series_reversion(const HalfLogSeries& f, int max_order2 = HalfLogSeries::kExact);

}  // namespace qmirror
