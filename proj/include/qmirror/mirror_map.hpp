#pragma once

#include "qmirror/picard_fuchs.hpp"
#include "qmirror/upoly.hpp"

namespace qmirror {

/// t = y1/y0 = log z + f1/f0, u = t / 2 pi i, q = e^t.
struct MirrorMap {
    int order = 0;                  // highest integer power of z (or q) kept
    HalfLogSeries q_over_z;         // exp(f1/f0), a z-series with constant term 1
    HalfLogSeries q_of_z;           // z * exp(f1/f0)
    HalfLogSeries z_of_q;           // compositional inverse, a q-series
    HalfLogSeries log_z_over_q;     // log(z(q)/q) as a q-series
    HalfLogSeries sqrt_z_over_q;    // (z(q)/q)^{1/2} with constant term 1
    HalfLogSeries dt_dlog_inverse;  // 1 / (1 + theta(f1/f0)) in z
};

MirrorMap build_mirror_map(const FrobeniusBasis& basis, int order);

/// Substitutes z^{m/2} -> q^{m/2} (z(q)/q)^{m/2} and log z -> 2 pi i u + log(z(q)/q).
UPoly to_q_coordinates(const HalfLogSeries& f, const MirrorMap& map);

/// delta = d/du written in z: 2 pi i theta / (1 + theta(f1/f0)).
HalfLogSeries delta_z(const HalfLogSeries& f, const MirrorMap& map);

}  // namespace qmirror
