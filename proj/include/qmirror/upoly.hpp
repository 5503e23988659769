#pragma once

#include "qmirror/series.hpp"

#include <array>
#include <string>

namespace qmirror {

/// Polynomial of degree <= 3 in a formal variable u with log-free q-series
/// coefficients (half-integer q exponents allowed). u is the canonical
/// parameter with q = exp(2 pi i u); the same type serves as C[v] at the
/// log point by using exact constant coefficients.
class UPoly {
public:
    static constexpr int kMaxDegree = 3;

    UPoly() : UPoly(HalfLogSeries::kExact) {}
    explicit UPoly(int order2);

    static UPoly constant(const ConstScalar& c, int order2 = HalfLogSeries::kExact);
    /// The monomial c * u^power.
    static UPoly u_power(int power, const ConstScalar& c = ConstScalar(1), int order2 = HalfLogSeries::kExact);
    /// Embeds a log-free q-series as the u^0 coefficient.
    static UPoly from_series(const HalfLogSeries& q_series);

    int order2() const { return order2_; }
    /// -1 for zero.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    const HalfLogSeries& coeff(int upow) const { return c_.at(static_cast<size_t>(upow)); }
    void set_coeff(int upow, const HalfLogSeries& s);

    UPoly truncated(int order2) const;
    /// Constant terms of every q-series coefficient (restriction to q = 0).
    UPoly constant_terms() const { return truncated(0); }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const ConstScalar& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const ConstScalar& c) { return a *= c; }
    friend UPoly operator*(const ConstScalar& c, UPoly a) { return a *= c; }
    friend bool operator==(const UPoly& a, const UPoly& b);

    std::string to_string() const;

private:
    int order2_;
    std::array<HalfLogSeries, kMaxDegree + 1> c_;
};

bool agree_to_order(const UPoly& a, const UPoly& b, int order2 = HalfLogSeries::kExact);

/// delta = d/du = 2 pi i q d/dq: delta(u) = 1, delta(q^{m/2}) = 2 pi i (m/2) q^{m/2}.
UPoly delta(const UPoly& f);

/// Analytic continuation u -> u + turns, so q^{m/2} -> (-1)^{m * turns} q^{m/2}.
UPoly shift_u(const UPoly& f, int turns);

}  // namespace qmirror
