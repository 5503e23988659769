#include "qmirror/open_string.hpp"

#include "qmirror/error.hpp"

namespace qmirror {

const char* to_string(Orientation o) { return o == Orientation::plus ? "plus" : "minus"; }

Orientation parse_orientation(const std::string& text) {
    if (text == "plus") return Orientation::plus;
    if (text == "minus") return Orientation::minus;
    fail(ErrorKind::Parse, "unknown orientation '" + text + "'");
}

namespace {

ConstScalar a0_value() { return ConstScalar::inv_pi_squared() * ConstScalar(15); }

ConstScalar sign_of(Orientation o) { return ConstScalar(o == Orientation::plus ? 1 : -1); }

}  // namespace

HalfLogSeries tension_rhs() {
    return HalfLogSeries::monomial(Var::z, 1, 0, ConstScalar::inv_pi_squared() * ConstScalar(make_rational(15, 16)));
}

Tension tension_B(const FrobeniusBasis& basis, int order2, Orientation o) {
    if (order2 < 1) fail(ErrorKind::Precondition, "tension needs order >= 1");
    if (2 * basis.order < order2) fail(ErrorKind::Precondition, "Frobenius basis too short for the tension order");
    Tension t;
    t.order2 = order2;
    t.orientation = o;
    t.a0 = a0_value();
    t.particular = solve_inhomogeneous(quintic_operator(), tension_rhs(), order2);
    t.tau = t.particular * t.a0.inverse();
    auto eta = integral_periods(basis);
    HalfLogSeries plus = (t.particular - eta[0] * ConstScalar(make_rational(1, 4))) - eta[1] * ConstScalar(make_rational(1, 2));
    t.full = o == Orientation::plus ? plus : (-eta[1] - plus);
    t.full = t.full.truncated(order2);
    return t;
}

UPoly tension_A(const Tension& t, const FrobeniusBasis& basis, const MirrorMap& map) {
    auto eta = integral_periods(basis);
    HalfLogSeries num = t.full + eta[1] + eta[0] * (sign_of(t.orientation) * ConstScalar(make_rational(1, 2)));
    HalfLogSeries z_form = num * series_invert(basis.y[0], t.order2);
    return to_q_coordinates(z_form.truncated(t.order2), map);
}

std::map<int, Rational> open_invariants(const UPoly& ta, Orientation o) {
    if (ta.degree() > 1) fail(ErrorKind::Inconsistency, "open tension has u-degree above one");
    const int order2 = ta.order2();
    if (!(ta.coeff(1) == HalfLogSeries::constant(Var::q, make_rational(1, 2), order2)))
        fail(ErrorKind::Inconsistency, "open tension u-linear part is not u/2");
    const ConstScalar s = sign_of(o);
    HalfLogSeries x = ta.coeff(0) * s;
    if (!(x.coeff(0) == ConstScalar(make_rational(1, 4)))) fail(ErrorKind::Inconsistency, "open tension constant is not +-1/4");
    x.set(0, 0, ConstScalar(0));
    if (!x.has_half_odd_support()) fail(ErrorKind::Inconsistency, "open tension has integer q-exponents");
    // 2 pi^2 = -(2 pi i)^2 / 2
    const ConstScalar two_pi2 = ConstScalar::monomial(2, 0, make_rational(-1, 2));
    std::map<int, Rational> out;
    for (int d = 1; d <= order2; d += 2) {
        ConstScalar v = x.coeff(d) * two_pi2;
        if (!v.is_rational()) fail(ErrorKind::Inconsistency, "open invariant is not rational at degree " + std::to_string(d));
        out[d] = v.as_rational();
    }
    return out;
}

std::map<int, Rational> open_integer_invariants(const std::map<int, Rational>& disk) {
    std::map<int, Rational> n;
    for (const auto& [d, v] : disk) {
        if (d % 2 == 0) fail(ErrorKind::Precondition, "disk invariants live in odd degree");
        Rational r = v;
        for (int k = 3; k <= d; k += 2)
            if (d % k == 0) r -= n.at(d / k) / make_rational(k * k);
        if (!is_integer(r))
            fail(ErrorKind::Inconsistency, "open invariant n_" + std::to_string(d) + " = " + to_string(r) + " is not an integer (wrong branch?)");
        n[d] = r;
    }
    return n;
}

HalfLogSeries monodromy_full_turn(const HalfLogSeries& x, int turns) {
    HalfLogSeries out(x.var(), x.order2());
    const ConstScalar shift = ConstScalar::two_pi_i(1) * ConstScalar(turns);
    for (int m = 0; m < x.extent(); ++m) {
        const bool flip = (m % 2 != 0) && (turns % 2 != 0);
        for (int k = 0; k <= HalfLogSeries::kMaxLog; ++k) {
            ConstScalar c = x.coeff(m, k);
            if (c.is_zero()) continue;
            if (flip) c = -c;
            // (L + shift)^k
            ConstScalar p = 1;
            for (int j = 0; j <= k; ++j) {
                out.add_to(m, k - j, c * p * ConstScalar(binomial(k, j)));
                p *= shift;
            }
        }
    }
    return out;
}

HalfLogSeries double_cover_log_monodromy(const HalfLogSeries& x) {
    // log(1 + D) = D - D^2/2 + D^3/3 with D = T^2 - 1; D^4 kills log-degree 3.
    HalfLogSeries out(x.var(), x.order2()), d = x;
    for (int k = 1; k <= 4; ++k) {
        d = monodromy_full_turn(d, 2) - d;
        out += d * ConstScalar(make_rational(k % 2 ? 1 : -1, k));
    }
    return out;
}

TensionMonodromyReport verify_tension_monodromy(const FrobeniusBasis& basis, int order2) {
    auto plus = tension_B(basis, order2, Orientation::plus);
    auto minus = tension_B(basis, order2, Orientation::minus);
    auto eta = integral_periods(basis);
    TensionMonodromyReport r;
    r.residual = (monodromy_full_turn(plus.full) + plus.full + eta[1] + eta[0]).truncated(order2);
    r.branch_sum = (plus.full + minus.full + eta[1]).truncated(order2);
    HalfLogSeries ratio = plus.full * series_invert(eta[0], order2);
    r.n_of_ratio = double_cover_log_monodromy(ratio).truncated(order2);
    r.ok = r.residual.is_zero() && r.branch_sum.is_zero() &&
           r.n_of_ratio == HalfLogSeries::constant(Var::z, -1, r.n_of_ratio.order2());
    return r;
}

ExtensionData normal_function(const Tension& t, const FrobeniusBasis& basis, const MirrorMap& map) {
    auto eta = integral_periods(basis);
    HalfLogSeries ratio_z = (t.full * series_invert(eta[0], t.order2)).truncated(t.order2);
    ExtensionData x;
    x.ratio = to_q_coordinates(ratio_z, map);
    const int order2 = x.ratio.order2();
    for (auto& c : x.one_Z) c = UPoly(order2);
    x.one_Z[0] = -x.ratio;
    x.one_Z[4] = UPoly::constant(1, order2);
    x.one_Z_spl = x.one_Z;
    x.one_Z_spl[1] = UPoly::constant(make_rational(1, 2), order2);
    for (auto& c : x.one_F_minus_one_Z) c = UPoly(order2);
    x.one_F_minus_one_Z[0] = -x.ratio;
    x.one_F_minus_one_Z[1] = delta(x.ratio);
    return x;
}

UPoly transversality_residual(const ExtensionData& x, const UPoly& yukawa) {
    FrameMatrix rows;
    for (int k = 0; k < 4; ++k) rows(0, k) = x.one_F_minus_one_Z[static_cast<size_t>(k)];
    return connection_applied(rows, yukawa)(0, 0);
}

namespace {

ExtVector continue_twice(const ExtVector& v) {
    // s^p(u + 2) in s-coordinates
    static const Matrix t2 = [] {
        Matrix n = monodromy_log_by_shift();
        return exp_nilpotent(Rational(2) * n);
    }();
    ExtVector out;
    for (auto& c : out) c = UPoly(v[0].order2());
    for (int j = 0; j < 4; ++j) {
        UPoly a = shift_u(v[static_cast<size_t>(j)], 2);
        if (a.is_zero()) continue;
        for (int i = 0; i < 4; ++i)
            if (t2(i, j) != 0) out[static_cast<size_t>(i)] += a * ConstScalar(t2(i, j));
    }
    out[4] = shift_u(v[4], 2);
    return out;
}

}  // namespace

ExtVector extended_log_monodromy(const ExtVector& v) {
    ExtVector out, d = v;
    for (auto& c : out) c = UPoly(v[0].order2());
    for (int k = 1; k <= 5; ++k) {
        ExtVector next = continue_twice(d);
        for (size_t i = 0; i < 5; ++i) next[i] -= d[i];
        d = next;
        for (size_t i = 0; i < 5; ++i) out[i] += d[i] * ConstScalar(make_rational(k % 2 ? 1 : -1, k));
    }
    return out;
}

Matrix extended_monodromy_matrix() {
    Matrix n4 = monodromy_log();
    Matrix n(5, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) n(i, j) = 2 * n4(i, j);
    n(0, 4) = 1;  // N(1_Z) = s^0
    return n;
}

Filtration extended_weight_filtration() {
    Filtration w;
    w.dim = 5;
    Matrix w3(5, 4);
    for (int i = 0; i < 4; ++i) w3(i, i) = 1;
    w.steps[3] = w3;
    w.steps[4] = Matrix::identity(5);
    return w;
}

LogPointData log_point_restriction(Orientation o) {
    // tau normalized to leading coefficient 1 survives as its constant a_0.
    UPoly t_plus = UPoly::u_power(1, make_rational(-1, 2)) + UPoly::constant(ConstScalar(make_rational(-1, 4)) + a0_value());
    // minus branch: T_- = -eta_1 - T_+, with eta_1 -> v at the log point
    LogPointData d;
    d.tension = o == Orientation::plus ? t_plus : -(UPoly::u_power(1) + t_plus);
    d.one_F_minus_one_Z = {-d.tension, delta(d.tension), UPoly(), UPoly()};
    return d;
}

}  // namespace qmirror
