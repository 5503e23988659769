#include "qmirror/error.hpp"
#include "qmirror/filtration.hpp"
#include "qmirror/linalg.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace qmirror;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<long>> r) {
    std::vector<std::vector<Rational>> v;
    for (const auto& row : r) {
        v.emplace_back();
        for (long x : row) v.back().emplace_back(x);
    }
    return Matrix::from_rows(v);
}

// sum_k N^k / k! by repeated multiplication, stopping at the first zero power
Matrix exp_by_series(const Matrix& n) {
    Matrix acc = Matrix::identity(n.rows());
    Matrix term = Matrix::identity(n.rows());
    for (long k = 1; k <= n.rows(); ++k) {
        term = make_rational(1, k) * (term * n);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

Matrix random_strict_upper(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-5, 5);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = make_rational(d(rng), 1 + (i + j) % 3);
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    auto a = rows({{1, 2}, {3, 4}});
    CHECK(a * Matrix::identity(2) == a);
    CHECK(inverse(a) * a == Matrix::identity(2));
    CHECK(rank(rows({{1, 2}, {2, 4}})) == 1);
    CHECK(dim(kernel(rows({{1, 2}, {2, 4}}))) == 1);
    CHECK(power(rows({{0, 1}, {0, 0}}), 2).is_zero());
    CHECK_KIND(inverse(rows({{1, 2}, {2, 4}})), ErrorKind::Precondition);
    auto x = solve(a, Matrix::column({Rational(5), Rational(11)}));
    REQUIRE(x);
    CHECK(*x == Matrix::column({Rational(1), Rational(2)}));
    CHECK_FALSE(solve(rows({{1, 2}, {2, 4}}), Matrix::column({Rational(1), Rational(0)})));
}

TEST_CASE("subspace operations") {
    auto e1 = Matrix::column({Rational(1), Rational(0), Rational(0)});
    auto e2 = Matrix::column({Rational(0), Rational(1), Rational(0)});
    auto plane = sum(e1, e2);
    CHECK(dim(plane) == 2);
    CHECK(contains(plane, e1));
    CHECK(dim(intersect(plane, sum(e2, Matrix::column({Rational(0), Rational(0), Rational(1)})))) == 1);
    CHECK(same_span(intersect(plane, sum(e2, Matrix::column({Rational(0), Rational(0), Rational(1)}))), e2));
    auto shift = rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(same_span(image(shift, plane), e1));
    CHECK(same_span(preimage(shift, e1), plane));
}

TEST_CASE("exp and log of nilpotent and unipotent matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto n = random_strict_upper(rng, 4 + trial % 3);
        CHECK(exp_nilpotent(n) == exp_by_series(n));
        CHECK(log_unipotent(exp_nilpotent(n)) == n);
    }
    CHECK_KIND(log_unipotent(rows({{2, 0}, {0, 1}})), ErrorKind::Precondition);
}

TEST_CASE("monodromy weight filtration") {
    // N = 0, pure of weight 3
    auto pure = relative_weight_filtration(Matrix(3, 3), pure_filtration(3, 3));
    CHECK(pure == pure_filtration(3, 3));
    CHECK(pure.dim_at(2) == 0);
    CHECK(pure.dim_at(3) == 3);

    // 2x2 Jordan block in weight 0: M_-1 = im N, M_0 = ker N, M_1 = all
    auto j = rows({{0, 1}, {0, 0}});
    auto m = monodromy_weight_filtration(j, 0);
    CHECK(m.dim_at(-2) == 0);
    CHECK(same_span(m.at(-1), column_space(j)));
    CHECK(same_span(m.at(0), kernel(j)));
    CHECK(m.dim_at(1) == 2);
    CHECK(lowers_by_two(j, m));
    CHECK(relative_weight_filtration(j, pure_filtration(2, 0)) == m);

    // maximal block of size 4 centered at 3: one vector each at 0, 2, 4, 6
    auto n4 = rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    auto m4 = monodromy_weight_filtration(n4, 3);
    CHECK(m4.dim_at(0) == 1);
    CHECK(m4.dim_at(1) == 1);
    CHECK(m4.dim_at(2) == 2);
    CHECK(m4.dim_at(4) == 3);
    CHECK(m4.dim_at(6) == 4);
    CHECK(lowers_by_two(n4, m4));
}

TEST_CASE("relative weight filtration") {
    // W_0 = span(e0), W_2 = all, N e1 = e0
    Filtration w{2, {{0, Matrix::column({Rational(1), Rational(0)})}, {2, Matrix::identity(2)}}};
    auto n = rows({{0, 1}, {0, 0}});
    auto m = relative_weight_filtration(n, w);
    CHECK(m.dim_at(-1) == 0);
    CHECK(m.dim_at(0) == 1);
    CHECK(m.dim_at(1) == 1);
    CHECK(m.dim_at(2) == 2);
    CHECK(lowers_by_two(n, m));

    // same N with the step at weight 1 has no relative filtration
    Filtration w1{2, {{1, Matrix::column({Rational(1), Rational(0)})}, {2, Matrix::identity(2)}}};
    CHECK_KIND(relative_weight_filtration(n, w1), ErrorKind::Admissibility);
}
