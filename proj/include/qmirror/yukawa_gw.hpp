#pragma once

#include "qmirror/mirror_map.hpp"

#include <map>

namespace qmirror {

/// Sign of the discriminant factor (1 -+ 5^5 z) in the Yukawa coupling.
enum class SignConvention { paper_plus, standard_minus };

const char* to_string(SignConvention s);
SignConvention parse_sign_convention(const std::string& text);

/// Y(z) = 5 / ((1 -+ 3125 z) y0^2) * (q dz / z dq)^3.
HalfLogSeries yukawa_z(const FrobeniusBasis& basis, const MirrorMap& map, SignConvention sign);

/// Y(z(q)) as an integer-exponent q-series.
HalfLogSeries yukawa_q(const FrobeniusBasis& basis, const MirrorMap& map, SignConvention sign);

struct InstantonTable {
    int order = 0;
    std::map<int, Rational> n;  // instanton numbers
    std::map<int, Rational> N;  // Gromov-Witten invariants, N_d = [q^d](Y - 5) / d^3

    bool integral() const;
    /// First degree with a non-integer n_d, or 0.
    int first_non_integral() const;
};

/// Peels Y = 5 + sum_d n_d d^3 q^d / (1 - q^d) degree by degree.
InstantonTable extract_instantons(const HalfLogSeries& yq);

/// sum_{k | d} n_{d/k} k^{-3}
Rational divisor_sum(const InstantonTable& t, int d);

/// (5/2)(y1 y2 / y0^2 - y3 / y0) in z.
HalfLogSeries gm_potential(const FrobeniusBasis& basis);

/// (5/6)(2 pi i)^3 u^3 + sum_d N_d q^d.
UPoly gw_potential(const InstantonTable& table);

}  // namespace qmirror
