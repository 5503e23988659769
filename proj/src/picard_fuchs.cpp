#include "qmirror/picard_fuchs.hpp"

#include "qmirror/error.hpp"

#include <algorithm>

namespace qmirror {

namespace {

// Truncated power series in rho modulo rho^4.
using Jet = std::array<Rational, 4>;

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet out{0, 0, 0, 0};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; i + j < 4; ++j) out[i + j] += a[i] * b[j];
    return out;
}

// m + c rho
Jet linear_jet(const Rational& m, const Rational& c) { return {m, c, 0, 0}; }

// 1 / (m + rho) = (1/m) sum_k (-rho/m)^k
Jet inverse_shift_jet(const Rational& m) {
    Jet out{0, 0, 0, 0};
    Rational term = 1 / m;
    for (size_t k = 0; k < 4; ++k) {
        out[k] = term;
        term = -term / m;
    }
    return out;
}

}  // namespace

int ThetaOperator::z_degree() const {
    int deg = 0;
    for (const auto& c : coeffs) deg = std::max(deg, static_cast<int>(c.size()) - 1);
    return deg;
}

Rational ThetaOperator::part_at(int d, const Rational& s) const {
    Rational out = 0, power = 1;
    for (const auto& c : coeffs) {
        if (d < static_cast<int>(c.size())) out += c[static_cast<size_t>(d)] * power;
        power *= s;
    }
    return out;
}

ThetaOperator theta_operator() { return ThetaOperator{{{0}, {1}}}; }

ThetaOperator quintic_operator() {
    // 5 (5t+1)(5t+2)(5t+3)(5t+4) = 3125 t^4 + 6250 t^3 + 4375 t^2 + 1250 t + 120
    return ThetaOperator{{
        {0, -120},
        {0, -1250},
        {0, -4375},
        {0, -6250},
        {1, -3125},
    }};
}

HalfLogSeries apply(const ThetaOperator& op, const HalfLogSeries& f) {
    HalfLogSeries out(f.var(), f.order2());
    HalfLogSeries power = f;  // theta^k f
    for (size_t k = 0; k < op.coeffs.size(); ++k) {
        if (k > 0) power = theta(power);
        for (size_t d = 0; d < op.coeffs[k].size(); ++d) {
            const Rational& c = op.coeffs[k][d];
            if (c == 0) continue;
            out += power.shifted(2 * static_cast<int>(d)) * ConstScalar(c);
        }
    }
    return out.truncated(f.order2());
}

FrobeniusBasis frobenius_solutions(int order) {
    if (order < 1) fail(ErrorKind::Precondition, "frobenius_solutions needs order >= 1");
    std::vector<Jet> c(static_cast<size_t>(order) + 1);
    c[0] = {1, 0, 0, 0};
    for (int n = 1; n <= order; ++n) {
        Jet next = c[static_cast<size_t>(n - 1)];
        for (int m = 5 * n - 4; m <= 5 * n; ++m) next = jet_mul(next, linear_jet(m, 5));
        Jet inv = inverse_shift_jet(n);
        for (int r = 0; r < 5; ++r) next = jet_mul(next, inv);
        c[static_cast<size_t>(n)] = next;
    }

    FrobeniusBasis basis;
    basis.order = order;
    const int order2 = 2 * order;
    const Rational fact[4] = {1, 1, 2, 6};
    for (size_t k = 0; k < 4; ++k) {
        basis.f[k] = HalfLogSeries(Var::z, order2);
        for (int n = 0; n <= order; ++n)
            basis.f[k].set(2 * n, 0, Rational(fact[k] * c[static_cast<size_t>(n)][k]));
    }
    for (size_t j = 0; j < 4; ++j) {
        basis.y[j] = HalfLogSeries(Var::z, order2);
        for (size_t i = 0; i <= j; ++i)
            for (int n = 0; n <= order; ++n)
                basis.y[j].add_to(2 * n, static_cast<int>(i), Rational(c[static_cast<size_t>(n)][j - i] / fact[i]));
    }
    return basis;
}

HalfLogSeries solve_inhomogeneous(const ThetaOperator& op, const HalfLogSeries& rhs, int order2) {
    if (rhs.has_logs()) fail(ErrorKind::Precondition, "inhomogeneous right side must be log-free");
    if (!rhs.has_half_odd_support())
        fail(ErrorKind::Ambiguity, "right side has integer exponents, which clash with the indicial root");
    int order = std::min(order2, rhs.order2());
    if (order >= HalfLogSeries::kExact) fail(ErrorKind::Unsupported, "solve_inhomogeneous needs a finite order");
    const int zdeg = op.z_degree();

    std::vector<ConstScalar> a(static_cast<size_t>(order) + 1);
    for (int m = 1; m <= order; m += 2) {
        ConstScalar acc = rhs.coeff(m);
        for (int d = 1; d <= zdeg && m - 2 * d >= 1; ++d) {
            const auto& prev = a[static_cast<size_t>(m - 2 * d)];
            if (prev.is_zero()) continue;
            Rational p = op.part_at(d, make_rational(m - 2 * d, 2));
            acc -= prev * ConstScalar(p);
        }
        Rational indicial = op.part_at(0, make_rational(m, 2));
        if (indicial == 0) {
            if (!acc.is_zero()) fail(ErrorKind::Ambiguity, "indicial polynomial vanishes on the support of the right side");
            continue;
        }
        a[static_cast<size_t>(m)] = acc * ConstScalar(Rational(1 / indicial));
    }
    HalfLogSeries out(rhs.var(), order);
    for (int m = 1; m <= order; m += 2) out.set(m, 0, a[static_cast<size_t>(m)]);
    return out;
}

}  // namespace qmirror
