#include "qmirror/filtration.hpp"

#include "qmirror/error.hpp"

#include <vector>

namespace qmirror {

Matrix Filtration::at(int k) const {
    auto it = steps.upper_bound(k);
    if (it == steps.begin()) return Matrix(dim, 0);
    return std::prev(it)->second;
}

bool operator==(const Filtration& a, const Filtration& b) {
    if (a.dim != b.dim) return false;
    std::vector<int> idx;
    for (const auto& [k, v] : a.steps) idx.push_back(k);
    for (const auto& [k, v] : b.steps) idx.push_back(k);
    for (int k : idx)
        if (!same_span(a.at(k), b.at(k))) return false;
    return true;
}

Filtration pure_filtration(int dim, int weight) {
    Filtration f;
    f.dim = dim;
    f.steps[weight] = Matrix::identity(dim);
    return f;
}

namespace {

struct Weighted {
    int weight;
    Matrix vec;  // n x 1
};

Matrix span_upto(const std::vector<Weighted>& vs, int n, int k) {
    Matrix m(n, 0);
    for (const auto& v : vs)
        if (v.weight <= k) m = hcat(m, v.vec);
    return column_space(m);
}

Matrix column_of(const Matrix& m, int j) {
    Matrix c(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) c(i, 0) = m(i, j);
    return c;
}

// Chain tops of the nilpotent induced on gr = top / below, grouped by
// chain length l+1: x with N^{l+1} x in below and N^l x not, chosen
// independent modulo below + ker(N^l) + N(ker N^{l+2}) (all relative to below).
std::vector<std::pair<int, Matrix>> chain_tops(const Matrix& n, const Matrix& top, const Matrix& below) {
    const int d = n.rows();
    auto rel_ker = [&](int j) { return intersect(top, preimage(power(n, j), below)); };
    int max_l = 0;
    while (!contains(rel_ker(max_l + 1), top)) ++max_l;
    std::vector<std::pair<int, Matrix>> out;
    for (int l = max_l; l >= 0; --l) {
        Matrix taken = sum(below, rel_ker(l));
        taken = sum(taken, image(n, rel_ker(l + 2)));
        for (const auto& [ll, x] : out)
            if (ll == l) taken = sum(taken, x);
        Matrix cand = rel_ker(l + 1);
        for (int j = 0; j < cand.cols(); ++j) {
            Matrix x = column_of(cand, j);
            if (contains(taken, x)) continue;
            taken = sum(taken, x);
            out.emplace_back(l, x);
        }
    }
    (void)d;
    return out;
}

Filtration assemble(const std::vector<Weighted>& vs, int n) {
    Filtration f;
    f.dim = n;
    std::map<int, bool> weights;
    for (const auto& v : vs) weights[v.weight] = true;
    for (const auto& [k, unused] : weights) f.steps[k] = span_upto(vs, n, k);
    return f;
}

}  // namespace

Filtration relative_weight_filtration(const Matrix& n, const Filtration& w) {
    const int d = w.dim;
    if (n.rows() != d || n.cols() != d) fail(ErrorKind::Precondition, "operator and filtration dimensions differ");
    if (!power(n, d).is_zero()) fail(ErrorKind::Precondition, "operator is not nilpotent");
    for (const auto& [k, wk] : w.steps)
        if (!contains(wk, n * wk)) fail(ErrorKind::Admissibility, "N does not preserve W_" + std::to_string(k));

    std::vector<Weighted> vs;
    Matrix below(d, 0);
    for (const auto& [k, wk] : w.steps) {
        for (const auto& [l, x] : chain_tops(n, wk, below)) {
            Matrix nl1 = power(n, l + 1);
            // y in M'_{k+l} with N^{l+1}(x - y) in M'_{k-l-2}
            Matrix mk = span_upto(vs, d, k + l);
            Matrix low = span_upto(vs, d, k - l - 2);
            Matrix sys = hcat(nl1 * mk, low);
            auto sol = solve(sys, nl1 * x);
            if (!sol) fail(ErrorKind::Admissibility, "no relative monodromy filtration: a primitive class of gr^W_" +
                                                         std::to_string(k) + " does not lift");
            Matrix coeff(mk.cols(), 1);
            for (int i = 0; i < mk.cols(); ++i) coeff(i, 0) = (*sol)(i, 0);
            Matrix xp = x - mk * coeff;
            Matrix v = xp;
            for (int j = 0; j <= l; ++j) {
                vs.push_back({k + l - 2 * j, v});
                v = n * v;
            }
        }
        below = wk;
    }
    Filtration m = assemble(vs, d);
    if (dim(m.at(m.steps.empty() ? 0 : m.steps.rbegin()->first)) != dim(w.at(w.steps.empty() ? 0 : w.steps.rbegin()->first)))
        fail(ErrorKind::Inconsistency, "relative filtration does not exhaust the space");
    if (!lowers_by_two(n, m)) fail(ErrorKind::Inconsistency, "relative filtration is not lowered by N");
    return m;
}

Filtration monodromy_weight_filtration(const Matrix& n, int center) {
    return relative_weight_filtration(n, pure_filtration(n.rows(), center));
}

bool lowers_by_two(const Matrix& n, const Filtration& m) {
    for (const auto& [k, mk] : m.steps)
        if (!contains(m.at(k - 2), n * mk)) return false;
    return true;
}

}  // namespace qmirror
