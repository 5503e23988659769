#include "qmirror/yukawa_gw.hpp"

#include "qmirror/error.hpp"

namespace qmirror {

const char* to_string(SignConvention s) {
    return s == SignConvention::paper_plus ? "paper-plus" : "standard-minus";
}

SignConvention parse_sign_convention(const std::string& text) {
    if (text == "paper-plus") return SignConvention::paper_plus;
    if (text == "standard-minus") return SignConvention::standard_minus;
    fail(ErrorKind::Parse, "unknown sign convention '" + text + "'");
}

HalfLogSeries yukawa_z(const FrobeniusBasis& basis, const MirrorMap& map, SignConvention sign) {
    const int order2 = 2 * map.order;
    const long s = sign == SignConvention::paper_plus ? 3125 : -3125;
    std::vector<Rational> disc{1, s};
    auto disc_series = HalfLogSeries::from_integer_coeffs(Var::z, disc, HalfLogSeries::kExact);
    auto y0 = basis.y[0].truncated(order2);
    auto denom = series_invert(disc_series * y0 * y0, order2);
    const auto& j = map.dt_dlog_inverse;
    return (denom * j * j * j * ConstScalar(5)).truncated(order2);
}

HalfLogSeries yukawa_q(const FrobeniusBasis& basis, const MirrorMap& map, SignConvention sign) {
    UPoly y = to_q_coordinates(yukawa_z(basis, map, sign), map);
    if (y.degree() > 0) fail(ErrorKind::Inconsistency, "Yukawa coupling picked up u-dependence");
    return y.coeff(0);
}

bool InstantonTable::integral() const { return first_non_integral() == 0; }

int InstantonTable::first_non_integral() const {
    for (const auto& [d, v] : n)
        if (!is_integer(v)) return d;
    return 0;
}

InstantonTable extract_instantons(const HalfLogSeries& yq) {
    if (yq.var() != Var::q) fail(ErrorKind::Precondition, "instanton extraction expects a q-series");
    if (!yq.has_integer_support() || yq.has_logs()) fail(ErrorKind::Precondition, "Yukawa q-series must be log-free with integer exponents");
    if (!(yq.coeff(0) == ConstScalar(5))) fail(ErrorKind::Precondition, "Yukawa coupling must have constant term 5");
    if (!yq.has_rational_coeffs()) fail(ErrorKind::Inconsistency, "Yukawa q-series has non-rational coefficients");
    InstantonTable t;
    t.order = yq.is_exact() ? std::max(0, (yq.extent() - 1) / 2) : yq.order2() / 2;
    for (int m = 1; m <= t.order; ++m) {
        Rational a = yq.coeff(2 * m).as_rational();
        Rational m3 = Rational(m) * m * m;
        t.N[m] = a / m3;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) a -= t.n[d] * d * d * d;
        t.n[m] = a / m3;
    }
    return t;
}

Rational divisor_sum(const InstantonTable& t, int d) {
    Rational out = 0;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0) out += t.n.at(d / k) / (Rational(k) * k * k);
    return out;
}

HalfLogSeries gm_potential(const FrobeniusBasis& basis) {
    const auto& y = basis.y;
    auto inv = series_invert(y[0]);
    auto phi = y[1] * y[2] * inv * inv - y[3] * inv;
    return phi * ConstScalar(make_rational(5, 2));
}

UPoly gw_potential(const InstantonTable& table) {
    const int order2 = 2 * table.order;
    UPoly out = UPoly::u_power(3, ConstScalar::two_pi_i(3) * ConstScalar(make_rational(5, 6)), order2);
    HalfLogSeries inst(Var::q, order2);
    for (const auto& [d, v] : table.N) inst.set(2 * d, 0, ConstScalar(v));
    return out + UPoly::from_series(inst);
}

}  // namespace qmirror
