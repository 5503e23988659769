#pragma once

#include "qmirror/filtration.hpp"
#include "qmirror/hodge_frames.hpp"
#include "qmirror/mirror_map.hpp"

#include <map>

namespace qmirror {

/// Which of the two chains between the curves C_+ and C_- is measured.
enum class Orientation { plus, minus };

const char* to_string(Orientation o);
Orientation parse_orientation(const std::string& text);

/// The domainwall tension on the z^{1/2} double cover:
/// T_+ = -eta_1/2 - eta_0/4 + a_0 tau, T_- = -eta_1 - T_+.
struct Tension {
    int order2 = 0;
    Orientation orientation = Orientation::plus;
    ConstScalar a0;              // 15 / pi^2
    HalfLogSeries particular;    // a_0 tau, half-odd support only
    HalfLogSeries tau;           // z^{1/2} (1 + O(z))
    HalfLogSeries full;
};

/// (15 / 16 pi^2) z^{1/2}
HalfLogSeries tension_rhs();

/// order2 counts half steps (21 means through z^{21/2}); basis.order must reach it.
Tension tension_B(const FrobeniusBasis& basis, int order2, Orientation o = Orientation::plus);

/// (T + eta_1 +- eta_0 / 2) / y_0 in q-coordinates, = u/2 +- (1/4 + X(q^{1/2})).
UPoly tension_A(const Tension& t, const FrobeniusBasis& basis, const MirrorMap& map);

/// Disk invariants N_d = 2 pi^2 [q^{d/2}] X for odd d, after checking the u/2 and +-1/4 parts.
/// These are rational in general: N_3 = 1530 + 30/9.
std::map<int, Rational> open_invariants(const UPoly& tension_a, Orientation o);

/// Inverts N_d = sum_{k odd, k | d} n_{d/k} / k^2. Throws if some n_d is not an integer.
std::map<int, Rational> open_integer_invariants(const std::map<int, Rational>& disk);

/// log z -> log z + 2 pi i, z^{m/2} -> (-1)^m z^{m/2}.
HalfLogSeries monodromy_full_turn(const HalfLogSeries& x, int turns = 1);

/// log(T_inf^2) acting on a z-series by substitution.
HalfLogSeries double_cover_log_monodromy(const HalfLogSeries& x);

struct TensionMonodromyReport {
    HalfLogSeries residual;        // T_inf(T) + T + eta_1 + eta_0
    HalfLogSeries branch_sum;      // T_+ + T_- + eta_1
    HalfLogSeries n_of_ratio;      // log(T_inf^2)(T / eta_0)
    bool ok = false;
};

TensionMonodromyReport verify_tension_monodromy(const FrobeniusBasis& basis, int order2);

/// A vector of the 5-dimensional extended space in the basis
/// (s^0, s^1, s^2, s^3, 1) where 1 = (2 pi i)^{-2} generates the weight-4 part.
using ExtVector = std::array<UPoly, 5>;

struct ExtensionData {
    ExtVector one_Z;                        // (-(T/eta_0), 0, 0, 0, 1)
    std::array<UPoly, 4> one_F_minus_one_Z; // e-coordinates: (-(T/eta_0), delta(T/eta_0), 0, 0)
    ExtVector one_Z_spl;                    // one_Z + s^1 / 2
    UPoly ratio;                            // T / eta_0 in q-coordinates
};

ExtensionData normal_function(const Tension& t, const FrobeniusBasis& basis, const MirrorMap& map);

/// e^0-coefficient of nabla_delta(1_F - 1_Z); must vanish.
UPoly transversality_residual(const ExtensionData& x, const UPoly& yukawa);

/// log of the double-cover monodromy (u -> u + 2, s^p -> T^2 s^p) on an ExtVector.
ExtVector extended_log_monodromy(const ExtVector& v);

/// Matrix of N on the basis (s^0, s^1, s^2, s^3, 1_Z) over the double cover.
Matrix extended_monodromy_matrix();
/// W_3 = span(s^0..s^3) and W_4 = everything.
Filtration extended_weight_filtration();

/// Data restricted to the log point; u is renamed v and delta = d/dv.
struct LogPointData {
    UPoly tension;                          // T(0) = -v/2 - 1/4 + a_0
    std::array<UPoly, 4> one_F_minus_one_Z; // e-coordinates
};

LogPointData log_point_restriction(Orientation o = Orientation::plus);

}  // namespace qmirror
