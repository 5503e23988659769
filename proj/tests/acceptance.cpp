// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.
// Exit status is the number of failed criteria.

#include "qmirror/serialize.hpp"
#include "qmirror/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qmirror;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

ConstScalar r(long num, long den = 1) { return ConstScalar(make_rational(num, den)); }
ConstScalar tp(int k, long num = 1, long den = 1) { return ConstScalar::monomial(k, 0, make_rational(num, den)); }

UPoly up(std::initializer_list<ConstScalar> cs) {
    UPoly out;
    int k = 0;
    for (const auto& c : cs) {
        if (!c.is_zero()) out += UPoly::u_power(k, c);
        ++k;
    }
    return out;
}

// ---- rho-jets mod rho^4 for the Frobenius oracle ----
using Jet = std::array<Rational, 4>;

Jet jmul(const Jet& a, const Jet& b) {
    Jet c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) c[i + j] += a[i] * b[j];
    return c;
}

Jet jinv(const Jet& a) {
    Jet x{};
    x[0] = 1 / a[0];
    for (int k = 1; k < 4; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * x[k - j];
        x[k] = -s / a[0];
    }
    return x;
}

// y_j = [rho^j] sum_n c_n(rho) z^{n + rho}, c_n = prod_{m<=5n}(5 rho + m) / prod_{m<=n}(rho + m)^5
std::array<HalfLogSeries, 4> frobenius_oracle(int order) {
    std::array<HalfLogSeries, 4> y;
    for (auto& s : y) s = HalfLogSeries(Var::z, 2 * order);
    Jet c{Rational(1), 0, 0, 0};
    const Rational fact[4] = {1, 1, 2, 6};
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            for (int m = 5 * n - 4; m <= 5 * n; ++m) c = jmul(c, Jet{Rational(m), Rational(5), 0, 0});
            Jet d{Rational(n), Rational(1), 0, 0};
            Jet d5 = jmul(jmul(jmul(jmul(d, d), d), d), d);
            c = jmul(c, jinv(d5));
        }
        // z^rho = sum_k rho^k log^k / k!
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k <= j; ++k) y[static_cast<size_t>(j)].add_to(2 * n, k, ConstScalar(c[static_cast<size_t>(j - k)] / fact[k]));
    }
    return y;
}

Integer fact_int(long n) { return factorial(static_cast<unsigned long>(n)); }

const Pipeline& pipeline10() {
    static const Pipeline p = build_pipeline(10);
    return p;
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(QMIRROR_CLI) + " " + args;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return "<popen failed>";
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int status = pclose(f);
    return out + "\n#status " + std::to_string(status);
}

}  // namespace

int main() {
    int failures = 0;
    auto criterion = [&](int id, const char* title, double limit_s, const std::function<Verdict()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.ok = false;
            v.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= limit_s) v.require(false, "time limit " + std::to_string(limit_s) + " s exceeded");
        if (!v.ok) ++failures;
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %2d %-28s %8.3f s (limit %.0f s)", v.ok ? "PASS" : "FAIL", id, title, secs, limit_s);
        std::cout << line;
        if (!v.note.empty()) std::cout << "  -- " << v.note;
        std::cout << std::endl;
    };

    criterion(1, "operator annihilation", 1, [] {
        Verdict v;
        auto b = frobenius_solutions(20);
        for (int j = 0; j < 4; ++j) {
            auto ly = apply(quintic_operator(), b.y[j]);
            v.require(ly.order2() >= 40 && ly.is_zero(), "L y_" + std::to_string(j) + " != 0");
        }
        return v;
    });

    criterion(2, "Frobenius coefficients", 1, [] {
        Verdict v;
        const int N = 20;
        auto b = frobenius_solutions(N);
        v.require(b.y[0].coeff(2) == r(120) && b.y[0].coeff(4) == r(113400), "y0 = 1 + 120 z + 113400 z^2");
        v.require(b.f[1].coeff(2) == r(770), "f1 z-coefficient 770");
        for (int n = 0; n <= N; ++n) {
            Integer fn = fact_int(n);
            Rational c = Rational(fact_int(5 * n)) / Rational(fn * fn * fn * fn * fn);
            Rational h = 0;
            for (int j = n + 1; j <= 5 * n; ++j) h += make_rational(1, j);
            v.require(b.y[0].coeff(2 * n) == ConstScalar(c), "y0 closed form at n=" + std::to_string(n));
            v.require(b.y[1].coeff(2 * n, 0) == ConstScalar(c * h * 5), "f1 closed form at n=" + std::to_string(n));
        }
        auto oracle = frobenius_oracle(N);
        for (int j = 0; j < 4; ++j) v.require(b.y[j] == oracle[static_cast<size_t>(j)], "y_" + std::to_string(j) + " against the rho-jet oracle");
        return v;
    });

    criterion(3, "mirror-map round trip", 1, [] {
        Verdict v;
        auto b = frobenius_solutions(20);
        auto map = build_mirror_map(b, 20);
        auto x = HalfLogSeries::monomial(Var::q, 2, 0, 1);
        auto zz = series_compose(map.z_of_q, map.q_of_z.with_var(Var::q));
        auto qq = series_compose(map.q_of_z.with_var(Var::q), map.z_of_q);
        v.require(zz.order2() >= 40 && agree_to_order(zz, x), "z(q(z)) = z");
        v.require(qq.order2() >= 40 && agree_to_order(qq, x), "q(z(q)) = q");
        v.require(map.z_of_q.coeff(2) == r(1) && map.z_of_q.coeff(4) == r(-770), "z(q) = q - 770 q^2 + ...");
        return v;
    });

    criterion(4, "instanton numbers", 5, [] {
        Verdict v;
        const auto& t = pipeline10().instantons;
        v.require(t.n.at(1) == 2875 && t.n.at(2) == 609250 && t.n.at(3) == 317206375, "n_1..n_3");
        for (int d = 1; d <= 8; ++d) v.require(is_integer(t.n.at(d)), "n_" + std::to_string(d) + " integral");
        for (const auto& [d, N] : t.N) v.require(N == divisor_sum(t, d), "divisor sum at d=" + std::to_string(d));
        return v;
    });

    criterion(5, "potential identity", 2, [] {
        Verdict v;
        const auto& p = pipeline10();
        auto gm = to_q_coordinates(gm_potential(p.basis), p.map);
        auto d3 = delta(delta(delta(gm))) * ConstScalar::two_pi_i(-3);
        v.require(d3.degree() == 0, "u-dependence in the third derivative");
        v.require(d3.coeff(0).order2() >= 20 && agree_to_order(d3.coeff(0), p.yukawa), "delta^3 Phi_GM / (2 pi i)^3 = Y(q)");
        return v;
    });

    criterion(6, "pairing matrix", 1, [] {
        Verdict v;
        auto s = pairing_matrix();
        v.require(s == Matrix::from_rows({{0, 0, 0, -1}, {0, 0, 1, -1}, {0, -1, 0, -5}, {1, 1, 5, 0}}), s.to_string());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v.require(s(i, j) == -s(j, i), "antisymmetry");
        return v;
    });

    criterion(7, "Gamma-class asymptotics", 1, [] {
        Verdict v;
        auto s = asymptotic_flat_basis();
        const ConstScalar z = ConstScalar::i_zeta3_over_pi_cubed() * r(5);
        const ConstScalar zero;
        // reference classes as tabulated, H^0..H^3 coefficients
        const std::array<std::array<UPoly, 4>, 4> shown = {{
            {UPoly(), UPoly(), UPoly(), up({r(1, 5)})},
            {UPoly(), UPoly(), up({tp(-1, 1, 5)}), up({r(1, 5), r(-1, 5)})},
            {UPoly(), up({tp(-2)}), up({tp(-1, -5, 4), tp(-1, -5, 2)}), up({r(7, 12), r(1, 2), r(1, 2)})},
            {up({tp(-3)}), up({zero, tp(-2, -1)}), up({tp(-1, 5, 12), zero, tp(-1, 1, 2)}), up({z, r(-5, 12), zero, r(-1, 6)})},
        }};
        for (int p = 0; p < 4; ++p)
            for (int j = 0; j < 4; ++j)
                if (!(s[static_cast<size_t>(p)].coeff(j) == shown[static_cast<size_t>(p)][static_cast<size_t>(j)]))
                    v.require(false, "s^" + std::to_string(p) + " H^" + std::to_string(j) + ": computed " +
                                         s[static_cast<size_t>(p)].coeff(j).to_string() + ", tabulated " +
                                         shown[static_cast<size_t>(p)][static_cast<size_t>(j)].to_string());
        return v;
    });

    criterion(8, "basis-change derivation", 2, [] {
        Verdict v;
        auto c = derive_cjk();
        const ConstScalar zero;
        v.require(c.c10 == r(-1) && c.c21 == r(5, 2) && c.c20 == r(-35, 12), "c10, c21, c20");
        v.require(c.c32 == zero && c.c31 == r(-25, 12) && c.c30 == ConstScalar::i_zeta3_over_pi_cubed() * r(-25), "c32, c31, c30");

        const auto& p = pipeline10();
        const int ord = 20;
        // s^p rebuilt from s~ via the c^{jk} must be flat
        auto s_in_e = s_from_tilde_s(c) * tilde_s_frame(p.potential);
        auto nab = connection_applied(s_in_e, UPoly::from_series(p.yukawa));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) v.require(nab(i, j).truncated(ord).is_zero(), "flatness of s^p");

        // tabulated integral periods
        const auto& b = p.basis;
        const ConstScalar iz = ConstScalar::i_zeta3_over_pi_cubed();
        std::array<HalfLogSeries, 4> eta = {
            b.y[0],
            b.y[1] * tp(-1),
            b.y[2] * tp(-2, 5) + b.y[1] * tp(-1, 5, 2) + b.y[0] * r(-25, 12),
            b.y[3] * tp(-3, 5) + b.y[2] * tp(-2, -5) + b.y[1] * tp(-1, 65, 12) + b.y[0] * (r(25, 12) - iz * r(25)),
        };
        auto e = inverse_unitriangular(s_in_e);
        auto y0 = to_q_coordinates(b.y[0], p.map);
        for (int k = 0; k < 4; ++k) {
            auto lhs = y0 * e(3, k);
            auto rhs = to_q_coordinates(eta[static_cast<size_t>(3 - k)], p.map);
            if (!agree_to_order(lhs, rhs, ord)) {
                std::string msg = "y0 e^3 s^" + std::to_string(k) + "-coefficient != tabulated eta_" + std::to_string(3 - k);
                auto diff = (lhs - rhs).truncated(0);
                msg += " (difference at q^0: " + diff.to_string() + ")";
                v.require(false, msg);
            }
        }
        return v;
    });

    criterion(9, "monodromy", 1, [] {
        Verdict v;
        auto n = monodromy_log();
        v.require(power(n, 4).is_zero() && !power(n, 3).is_zero(), "N^4 = 0, N^3 != 0");
        v.require(exp_nilpotent(n).is_integral(), "exp(N) integral");
        auto n2 = Rational(2) * n;
        v.require(n2.col(1) == std::vector<Rational>{-2, 0, 0, 0}, "N(s^1) = -2 s^0");
        v.require(n == monodromy_log_by_shift(), "class shift route");
        // substitution on the periods P_p = eta_{3-p} against -2N
        auto b = frobenius_solutions(5);
        auto eta = integral_periods(b);
        for (int p = 0; p < 4; ++p) {
            auto lhs = double_cover_log_monodromy(eta[static_cast<size_t>(3 - p)]);
            HalfLogSeries rhs(Var::z, lhs.order2());
            for (int q = 0; q < 4; ++q)
                if (n2(p, q) != 0) rhs -= eta[static_cast<size_t>(3 - q)] * ConstScalar(n2(p, q));
            v.require(agree_to_order(lhs, rhs), "substitution vs matrix on P_" + std::to_string(p));
        }
        return v;
    });

    criterion(10, "tension", 2, [] {
        Verdict v;
        auto b = frobenius_solutions(11);
        auto t = tension_B(b, 21);
        auto lt = apply(quintic_operator(), t.full);
        v.require(lt.order2() >= 21 && agree_to_order(lt, tension_rhs()), "L T_B = (15/16 pi^2) z^{1/2}");
        v.require(t.particular.coeff(1) == ConstScalar::inv_pi_squared() * r(15), "leading coefficient 15/pi^2");
        auto rep = verify_tension_monodromy(b, 21);
        v.require(rep.residual.is_zero(), "T_inf(T) = -(T + eta_1 + eta_0)");
        v.require(rep.branch_sum.is_zero(), "T_+ + T_- = -eta_1");
        return v;
    });

    criterion(11, "normal function", 1, [] {
        Verdict v;
        const auto& p = pipeline10();
        auto t = tension_B(p.basis, 20);
        auto x = normal_function(t, p.basis, p.map);
        auto res = transversality_residual(x, UPoly::from_series(p.yukawa));
        v.require(res.order2() >= 20 && res.is_zero(), "e^0-coefficient of nabla(1_F - 1_Z)");
        auto nz = extended_log_monodromy(x.one_Z);
        v.require((nz[0] - UPoly::constant(1)).truncated(20).is_zero(), "N(1_Z) = s^0");
        for (int k = 1; k < 5; ++k) v.require(nz[static_cast<size_t>(k)].is_zero(), "N(1_Z) = s^0");
        for (const auto& c : extended_log_monodromy(x.one_Z_spl)) v.require(c.is_zero(), "N(1_Z^spl) = 0");
        // 1_F = 1_Z - e^1/2 + (v/2 + 1/4 - a_0) e^0
        auto lp = log_point_restriction();
        const ConstScalar a0 = ConstScalar::inv_pi_squared() * r(15);
        v.require(lp.one_F_minus_one_Z[1] == UPoly::constant(r(-1, 2)), "e^1 coefficient -1/2");
        v.require(lp.one_F_minus_one_Z[0] == up({r(1, 4) - a0, r(1, 2)}), "e^0 coefficient v/2 + 1/4 - a_0");
        v.require(lp.one_F_minus_one_Z[2].is_zero() && lp.one_F_minus_one_Z[3].is_zero(), "no e^2, e^3 part");
        return v;
    });

    criterion(12, "relative weight filtration", 1, [] {
        Verdict v;
        auto m = relative_weight_filtration(extended_monodromy_matrix(), extended_weight_filtration());
        v.require(m.dim_at(0) == 1 && m.dim_at(2) == 2 && m.dim_at(4) == 4 && m.dim_at(6) == 5, "dimensions (1,2,4,5)");
        auto e = [](int i) {
            std::vector<Rational> x(5, Rational(0));
            x[static_cast<size_t>(i)] = 1;
            return Matrix::column(x);
        };
        v.require(same_span(m.at(0), e(0)) && same_span(m.at(1), e(0)), "M_0 = M_1 = R s^0");
        v.require(same_span(m.at(2), sum(e(0), e(1))) && same_span(m.at(3), m.at(2)), "M_2 = M_3 = M_1 + R s^1");
        v.require(same_span(m.at(4), sum(m.at(2), sum(e(2), e(4)))) && same_span(m.at(5), m.at(4)), "M_4 = M_5 = M_3 + R s^2 + R 1_Z");
        v.require(m.dim_at(-1) == 0, "M_-1 = 0");
        return v;
    });

    criterion(13, "open invariants", 5, [] {
        Verdict v;
        auto run = [](int order2) {
            const int zorder = (order2 + 1) / 2;
            auto b = frobenius_solutions(zorder);
            auto map = build_mirror_map(b, zorder);
            return open_invariants(tension_A(tension_B(b, order2), b, map), Orientation::plus);
        };
        auto d10 = run(10);
        auto d15 = run(15);
        const Rational golden_first = 30;
        v.require(d10.at(1) == golden_first, "first value " + to_string(d10.at(1)));
        for (const auto& [d, val] : d10) v.require(d15.at(d) == val, "order stability at d=" + std::to_string(d));
        std::string raw;
        for (const auto& [d, val] : d10) {
            if (d > 9) continue;
            raw += (raw.empty() ? "" : ", ") + to_string(val);
            v.require(is_integer(val), "2 pi^2 [q^" + std::to_string(d) + "/2] = " + to_string(val) + " not an integer");
        }
        if (!v.ok) {
            std::string n;
            for (const auto& [d, val] : open_integer_invariants(d10))
                if (d <= 9) n += (n.empty() ? "" : ", ") + to_string(val);
            v.note += "; raw d<=9: " + raw + "; after odd k^-2 multicover inversion: " + n;
        }
        return v;
    });

    criterion(14, "determinism", 5, [] {
        Verdict v;
        auto a = run_cli("verify --order 8");
        auto b = run_cli("verify --order 8");
        v.require(a == b, "verify output differs between runs");
        v.require(a.find("#status 0") != std::string::npos, "verify exit status");
        auto c = run_cli("gw --order 6 --format csv");
        v.require(c == run_cli("gw --order 6 --format csv"), "gw output differs between runs");
        return v;
    });

    std::cout << (14 - failures) << "/14 criteria passed" << std::endl;
    return failures;
}
