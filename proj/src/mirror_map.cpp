#include "qmirror/mirror_map.hpp"

#include "qmirror/error.hpp"

#include <algorithm>
#include <vector>

namespace qmirror {

MirrorMap build_mirror_map(const FrobeniusBasis& basis, int order) {
    if (order < 1) fail(ErrorKind::Precondition, "mirror map needs order >= 1");
    if (basis.order < order) fail(ErrorKind::Precondition, "Frobenius basis has insufficient order for the mirror map");
    const int order2 = 2 * order;
    MirrorMap map;
    map.order = order;

    HalfLogSeries inv_f0 = series_invert(basis.f[0], order2);
    HalfLogSeries ratio = (basis.f[1] * inv_f0).truncated(order2);
    map.q_over_z = series_exp(ratio, order2);
    map.q_of_z = map.q_over_z.shifted(2).truncated(order2);
    map.z_of_q = series_reversion(map.q_of_z.with_var(Var::q), order2);
    // z(q)/q = 1 / (q/z)(z(q)); dividing z(q) by q would lose one order.
    HalfLogSeries q_over_z_at = series_compose(map.q_over_z.with_var(Var::q), map.z_of_q);
    HalfLogSeries z_over_q = series_invert(q_over_z_at, order2);
    map.log_z_over_q = series_log(z_over_q, order2);
    map.sqrt_z_over_q = series_power(z_over_q, make_rational(1, 2), order2);
    map.dt_dlog_inverse = series_invert(HalfLogSeries::constant(Var::z, ConstScalar(1), order2) + theta(ratio), order2);
    return map;
}

UPoly to_q_coordinates(const HalfLogSeries& f, const MirrorMap& map) {
    if (f.var() != Var::z) fail(ErrorKind::Precondition, "to_q_coordinates expects a z-series");
    const int order2 = std::min(f.order2(), 2 * map.order);
    const int top = std::min(f.extent() - 1, order2);

    // s^m with s = (z(q)/q)^{1/2}
    std::vector<HalfLogSeries> spow;
    spow.push_back(HalfLogSeries::constant(Var::q, ConstScalar(1), order2));
    for (int m = 1; m <= top; ++m) spow.push_back((spow.back() * map.sqrt_z_over_q).truncated(order2));

    // (2 pi i u + L)^k
    UPoly log_z = UPoly::u_power(1, ConstScalar::two_pi_i(1), order2) + UPoly::from_series(map.log_z_over_q.truncated(order2));
    std::array<UPoly, 4> log_pow;
    log_pow[0] = UPoly::constant(ConstScalar(1), order2);
    for (size_t k = 1; k < 4; ++k) log_pow[k] = (log_pow[k - 1] * log_z).truncated(order2);

    UPoly out(order2);
    for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k) {
        HalfLogSeries part(Var::q, order2);
        bool any = false;
        for (int m = 0; m <= top; ++m) {
            const ConstScalar& c = f.coeff(m, k);
            if (c.is_zero()) continue;
            part += (spow[static_cast<size_t>(m)] * c).shifted(m).truncated(order2);
            any = true;
        }
        if (any) out += (UPoly::from_series(part) * log_pow[static_cast<size_t>(k)]).truncated(order2);
    }
    return out;
}

HalfLogSeries delta_z(const HalfLogSeries& f, const MirrorMap& map) {
    if (f.var() != Var::z) fail(ErrorKind::Precondition, "delta_z expects a z-series");
    return theta(f) * map.dt_dlog_inverse * ConstScalar::two_pi_i(1);
}

}  // namespace qmirror
