#pragma once

#include "qmirror/series.hpp"

#include <array>
#include <vector>

namespace qmirror {

/// sum_k c_k(z) theta^k with theta = z d/dz and polynomial coefficients
/// standing to the left of theta^k.
struct ThetaOperator {
    /// coeffs[k][d] is the coefficient of z^d theta^k.
    std::vector<std::vector<Rational>> coeffs;

    int theta_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    int z_degree() const;
    /// sum_k coeffs[k][d] s^k.
    Rational part_at(int d, const Rational& s) const;
};

/// The single theta = z d/dz.
ThetaOperator theta_operator();

/// theta^4 - 5 z (5 theta + 1)(5 theta + 2)(5 theta + 3)(5 theta + 4).
ThetaOperator quintic_operator();

HalfLogSeries apply(const ThetaOperator& op, const HalfLogSeries& f);

/// Frobenius basis at the point of maximal unipotent monodromy.
///
/// y[j] carries log-degree exactly j and j! y_j = sum_i binom(j, i) f_{j-i} (log z)^i;
/// f[0] = y[0] has coefficients (5n)!/(n!)^5 and f[j](0) = 0 for j > 0.
struct FrobeniusBasis {
    int order = 0;  // highest integer power of z kept
    std::array<HalfLogSeries, 4> y;
    std::array<HalfLogSeries, 4> f;
};

FrobeniusBasis frobenius_solutions(int order);

/// Unique solution supported on half-odd exponents of op(x) = rhs.
/// rhs must be log-free with half-odd support; an integer exponent throws Ambiguity.
HalfLogSeries solve_inhomogeneous(const ThetaOperator& op, const HalfLogSeries& rhs, int order2);

}  // namespace qmirror
