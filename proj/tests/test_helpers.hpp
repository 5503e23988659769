#pragma once

#include "qmirror/error.hpp"
#include "qmirror/series.hpp"

#include "doctest.h"

#include <random>

#define CHECK_KIND(expr, k)                                         \
    do {                                                            \
        bool thrown_ = false;                                       \
        try {                                                       \
            (void)(expr);                                           \
        } catch (const qmirror::MathError& e_) {                    \
            thrown_ = true;                                         \
            CHECK(e_.kind() == (k));                                \
        }                                                           \
        CHECK_MESSAGE(thrown_, "expected a MathError: " #expr);     \
    } while (0)

namespace testing_util {

using namespace qmirror;

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    return make_rational(num(rng), den(rng));
}

// Random constant with a few monomials; zeta3 optional.
inline ConstScalar random_scalar(std::mt19937& rng, bool allow_zeta = true) {
    std::uniform_int_distribution<int> terms(0, 3), pw(-3, 3), z(0, 1);
    ConstScalar out;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) out += ConstScalar::monomial(pw(rng), allow_zeta ? z(rng) : 0, small_rational(rng));
    return out;
}

inline HalfLogSeries random_series(std::mt19937& rng, int order2, int max_log, bool half = false) {
    HalfLogSeries out(Var::z, order2);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int m = 0; m <= order2; m += half ? 1 : 2)
        for (int k = 0; k <= max_log; ++k)
            if (coin(rng) == 0) out.set(m, k, ConstScalar(small_rational(rng)));
    return out;
}

inline HalfLogSeries zs(std::initializer_list<long> coeffs, int order2 = -1) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return HalfLogSeries::from_integer_coeffs(Var::z, v, order2);
}

}  // namespace testing_util
