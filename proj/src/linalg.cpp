#include "qmirror/linalg.hpp"

#include "qmirror/error.hpp"

#include <sstream>

namespace qmirror {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Rational(0)) {
    if (rows < 0 || cols < 0) fail(ErrorKind::Precondition, "negative matrix size");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c) fail(ErrorKind::Precondition, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) {
    Matrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = v[static_cast<size_t>(i)];
    return m;
}

std::vector<Rational> Matrix::col(int j) const {
    std::vector<Rational> out;
    for (int i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_integral() const {
    for (const auto& x : a_)
        if (!is_integer(x)) return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(*this);
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::Precondition, "matrix size mismatch");
    Matrix m(a);
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::Precondition, "matrix product size mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a);
    for (auto& x : m.a_) x *= s;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << qmirror::to_string((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix power(const Matrix& m, int k) {
    Matrix out = Matrix::identity(m.rows());
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::Precondition, "hcat row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix exp_nilpotent(const Matrix& n) {
    const int d = n.rows();
    if (!power(n, d).is_zero()) fail(ErrorKind::Precondition, "exp_nilpotent: matrix is not nilpotent");
    Matrix out = Matrix::identity(d), term = Matrix::identity(d);
    for (int k = 1; k < d; ++k) {
        term = make_rational(1, k) * (term * n);
        out = out + term;
    }
    return out;
}

Matrix log_unipotent(const Matrix& t) {
    const int d = t.rows();
    Matrix x = t - Matrix::identity(d);
    if (!power(x, d).is_zero()) fail(ErrorKind::Precondition, "log_unipotent: matrix is not unipotent");
    Matrix out(d, d), term = Matrix::identity(d);
    for (int k = 1; k < d; ++k) {
        term = term * x;
        out = out + make_rational(k % 2 ? 1 : -1, k) * term;
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rational inv = 1 / m(r, c);
        for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

}  // namespace

int rank(const Matrix& m) {
    Matrix w(m);
    return static_cast<int>(rref(w).size());
}

Matrix inverse(const Matrix& m) {
    const int n = m.rows();
    if (m.cols() != n) fail(ErrorKind::Precondition, "inverse of a non-square matrix");
    Matrix w = hcat(m, Matrix::identity(n));
    auto piv = rref(w);
    if (static_cast<int>(piv.size()) < n || piv.back() >= n) fail(ErrorKind::Precondition, "matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = w(i, n + j);
    return out;
}

Matrix column_space(const Matrix& m) {
    Matrix t = transpose(m);
    auto piv = rref(t);
    Matrix out(m.rows(), static_cast<int>(piv.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i) out(i, j) = t(j, i);
    return out;
}

Matrix kernel(const Matrix& m) {
    Matrix w(m);
    auto piv = rref(w);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : piv) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free.push_back(c);
    Matrix out(m.cols(), static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        out(free[k], static_cast<int>(k)) = 1;
        for (size_t r = 0; r < piv.size(); ++r) out(piv[r], static_cast<int>(k)) = -w(static_cast<int>(r), free[k]);
    }
    return column_space(out);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::Precondition, "solve: row mismatch");
    Matrix w = hcat(a, b);
    auto piv = rref(w);
    for (int c : piv)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(piv[r], j) = w(static_cast<int>(r), a.cols() + j);
    return x;
}

int dim(const Matrix& subspace) { return rank(subspace); }

Matrix sum(const Matrix& u, const Matrix& v) { return column_space(hcat(u, v)); }

Matrix intersect(const Matrix& u, const Matrix& v) {
    // x = U a = V b  <=>  [U, -V] (a; b) = 0
    Matrix k = kernel(hcat(u, -v));
    Matrix a(u.cols(), k.cols());
    for (int i = 0; i < u.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) a(i, j) = k(i, j);
    return column_space(u * a);
}

bool contains(const Matrix& subspace, const Matrix& vectors) {
    return rank(hcat(subspace, vectors)) == rank(subspace);
}

bool same_span(const Matrix& u, const Matrix& v) { return column_space(u) == column_space(v); }

Matrix image(const Matrix& n, const Matrix& subspace) { return column_space(n * subspace); }

Matrix preimage(const Matrix& n, const Matrix& subspace) {
    // N x = U a  <=>  [N, -U] (x; a) = 0
    Matrix k = kernel(hcat(n, -subspace));
    Matrix x(n.cols(), k.cols());
    for (int i = 0; i < n.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) x(i, j) = k(i, j);
    return column_space(x);
}

}  // namespace qmirror
