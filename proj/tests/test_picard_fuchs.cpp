#include "qmirror/picard_fuchs.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace qmirror;
using namespace testing_util;

TEST_CASE("quintic operator coefficients") {
    auto op = quintic_operator();
    REQUIRE(op.theta_degree() == 4);
    CHECK(op.coeffs[0] == std::vector<Rational>{0, -120});
    CHECK(op.coeffs[4] == std::vector<Rational>{1, -3125});
    // compare with the factored form at a few theta values
    for (int s = -3; s <= 3; ++s) {
        Rational t = make_rational(s, 2);
        Rational factored = 5 * (5 * t + 1) * (5 * t + 2) * (5 * t + 3) * (5 * t + 4);
        CHECK(op.part_at(1, t) == -factored);
        CHECK(op.part_at(0, t) == t * t * t * t);
    }
    CHECK(apply(op, HalfLogSeries::constant(Var::z, 1)) == zs({0, -120}, HalfLogSeries::kExact));
}

TEST_CASE("apply: monomial rule") {
    auto op = quintic_operator();
    auto r = apply(op, HalfLogSeries::monomial(Var::z, 1, 0, 1));
    CHECK(r.coeff(1) == ConstScalar(make_rational(1, 16)));
    Rational expect = -5 * make_rational(7, 2) * make_rational(9, 2) * make_rational(11, 2) * make_rational(13, 2);
    CHECK(r.coeff(3) == ConstScalar(expect));
    CHECK(apply(theta_operator(), HalfLogSeries::monomial(Var::z, 0, 1, 1)) == HalfLogSeries::constant(Var::z, 1));
}

TEST_CASE("Frobenius basis against closed forms") {
    auto b = frobenius_solutions(12);
    for (long n = 0; n <= 12; ++n) {
        CHECK(b.y[0].coeff(2 * static_cast<int>(n)) == ConstScalar(Rational(oracle::quintic_coeff(n))));
        CHECK(b.f[1].coeff(2 * static_cast<int>(n)) == ConstScalar(oracle::f1_coeff(n)));
    }
    CHECK(b.y[0].coeff(2) == ConstScalar(120));
    CHECK(b.y[0].coeff(4) == ConstScalar(113400));
    CHECK(b.f[1].coeff(2) == ConstScalar(770));
    CHECK(b.f[2].coeff(0).is_zero());
    CHECK(b.f[3].coeff(0).is_zero());
    for (int j = 0; j < 4; ++j) {
        CHECK(b.y[static_cast<size_t>(j)].log_degree() == j);
        CHECK(b.y[static_cast<size_t>(j)].coeff(0, j) == ConstScalar(Rational(1) / Rational(factorial(static_cast<unsigned long>(j)))));
    }
    // j! y_j = sum binom(j,i) f_{j-i} L^i
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i <= j; ++i)
            for (int m = 0; m <= 24; m += 2) {
                auto lhs = b.y[static_cast<size_t>(j)].coeff(m, i) * ConstScalar(Rational(factorial(static_cast<unsigned long>(j))));
                auto rhs = b.f[static_cast<size_t>(j - i)].coeff(m) * ConstScalar(binomial(j, i));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("L annihilates the Frobenius basis") {
    auto op = quintic_operator();
    for (int order : {5, 10, 20}) {
        auto b = frobenius_solutions(order);
        for (const auto& y : b.y) {
            auto r = apply(op, y);
            CHECK(r.is_zero());
            CHECK(r.order2() == 2 * order);
        }
    }
}

TEST_CASE("truncation monotonicity of the Frobenius basis") {
    auto lo = frobenius_solutions(6), hi = frobenius_solutions(14);
    for (size_t j = 0; j < 4; ++j) CHECK(agree_to_order(lo.y[j], hi.y[j]));
    CHECK(hi.y[3].truncated(12) == lo.y[3]);
}

TEST_CASE("inhomogeneous solve") {
    auto op = quintic_operator();
    auto rhs = HalfLogSeries::monomial(Var::z, 1, 0, ConstScalar::inv_pi_squared() * ConstScalar(make_rational(15, 16)));
    auto sol = solve_inhomogeneous(op, rhs, 21);
    CHECK(sol.coeff(1) == ConstScalar::inv_pi_squared() * ConstScalar(15));
    // one-step recursion: a3 (3/2)^4 = 5 (7/2)(9/2)(11/2)(13/2) a1
    Rational factor = 5 * make_rational(7, 2) * make_rational(9, 2) * make_rational(11, 2) * make_rational(13, 2);
    factor /= make_rational(81, 16);
    CHECK(sol.coeff(3) == sol.coeff(1) * ConstScalar(factor));
    CHECK(sol.has_half_odd_support());
    CHECK(agree_to_order(apply(op, sol), rhs));
    CHECK(apply(op, sol).order2() == 21);

    CHECK(solve_inhomogeneous(op, HalfLogSeries(Var::z, 9), 9).is_zero());
    CHECK_KIND(solve_inhomogeneous(op, HalfLogSeries::monomial(Var::z, 2, 0, 1), 9), ErrorKind::Ambiguity);
    CHECK_KIND(solve_inhomogeneous(op, HalfLogSeries::monomial(Var::z, 1, 1, 1), 9), ErrorKind::Precondition);
}
