#include "qmirror/mirror_map.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace qmirror;
using namespace testing_util;

namespace {

std::vector<Rational> rational_coeffs(const HalfLogSeries& s, int n) {
    std::vector<Rational> out;
    for (int k = 0; k <= n; ++k) out.push_back(s.coeff(2 * k).as_rational());
    return out;
}

}  // namespace

TEST_CASE("mirror map: leading terms and round trips") {
    const int N = 20;
    auto b = frobenius_solutions(N);
    auto map = build_mirror_map(b, N);
    CHECK(map.q_of_z.coeff(0).is_zero());
    CHECK(map.q_of_z.coeff(2) == ConstScalar(1));
    CHECK(map.q_of_z.coeff(4) == ConstScalar(770));
    CHECK(map.z_of_q.coeff(2) == ConstScalar(1));
    CHECK(map.z_of_q.coeff(4) == ConstScalar(-770));
    CHECK(map.z_of_q.order2() == 2 * N);

    // independent composition with plain vectors
    auto qz = rational_coeffs(map.q_of_z, N), zq = rational_coeffs(map.z_of_q, N);
    std::vector<Rational> x(N + 1, Rational(0));
    x[1] = 1;
    CHECK(oracle::compose(qz, zq, N) == x);
    CHECK(oracle::compose(zq, qz, N) == x);
}

TEST_CASE("mirror map: q-coordinates") {
    const int N = 8;
    auto b = frobenius_solutions(N);
    auto map = build_mirror_map(b, N);

    auto logz = to_q_coordinates(HalfLogSeries::monomial(Var::z, 0, 1, 1), map);
    CHECK(logz.coeff(1) == HalfLogSeries::constant(Var::q, ConstScalar::two_pi_i(1), 2 * N));
    CHECK(logz.coeff(0).coeff(0).is_zero());
    CHECK(logz.coeff(0).coeff(2) == ConstScalar(-770));

    auto z = to_q_coordinates(HalfLogSeries::monomial(Var::z, 2, 0, 1), map);
    CHECK(agree_to_order(z.coeff(0), map.z_of_q));

    // y0(z(q)) through the plain-vector oracle
    auto y0q = to_q_coordinates(b.y[0], map);
    auto expect = oracle::compose(rational_coeffs(b.y[0], N), rational_coeffs(map.z_of_q, N), N);
    CHECK(rational_coeffs(y0q.coeff(0), N) == expect);
    CHECK(expect[1] == 120);

    // t = y1/y0 becomes exactly 2 pi i u
    auto t = to_q_coordinates(b.y[1] * series_invert(b.y[0]), map);
    CHECK(agree_to_order(t, UPoly::u_power(1, ConstScalar::two_pi_i(1))));

    // z^{1/2} -> q^{1/2} (1 - 385 q + ...)
    auto root = to_q_coordinates(HalfLogSeries::monomial(Var::z, 1, 0, 1), map);
    CHECK(root.coeff(0).coeff(1) == ConstScalar(1));
    CHECK(root.coeff(0).coeff(3) == ConstScalar(-385));
    auto sq = root * root;
    CHECK(agree_to_order(sq.coeff(0), map.z_of_q));
}

TEST_CASE("mirror map: delta commutes with the coordinate change") {
    const int N = 8;
    auto b = frobenius_solutions(N);
    auto map = build_mirror_map(b, N);
    auto logz = HalfLogSeries::monomial(Var::z, 0, 1, 1);
    CHECK(agree_to_order(to_q_coordinates(delta_z(logz, map), map), delta(to_q_coordinates(logz, map))));

    std::mt19937 rng(21);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_series(rng, 2 * N, 2, true);
        CHECK(agree_to_order(to_q_coordinates(delta_z(f, map), map), delta(to_q_coordinates(f, map))));
    }
    CHECK(agree_to_order(delta(UPoly::u_power(2)), UPoly::u_power(1, 2)));
}
