#pragma once

#include "qmirror/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmirror {

/// Dense exact rational matrix. Subspaces are carried as matrices whose
/// columns form a basis (an n x 0 matrix is the zero subspace).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix column(const std::vector<Rational>& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }
    std::vector<Rational> col(int j) const;

    bool is_zero() const;
    bool is_integral() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

Matrix power(const Matrix& m, int k);
Matrix hcat(const Matrix& a, const Matrix& b);

/// exp(N) for nilpotent N (throws Precondition otherwise).
Matrix exp_nilpotent(const Matrix& n);
/// log(T) for unipotent T (throws Precondition otherwise).
Matrix log_unipotent(const Matrix& t);

int rank(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Basis of the column space, in reduced form (canonical for the subspace).
Matrix column_space(const Matrix& m);
Matrix kernel(const Matrix& m);
/// Some x with a x = b, if any.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

int dim(const Matrix& subspace);
Matrix sum(const Matrix& u, const Matrix& v);
Matrix intersect(const Matrix& u, const Matrix& v);
bool contains(const Matrix& subspace, const Matrix& vectors);
bool same_span(const Matrix& u, const Matrix& v);
/// N(U) as a subspace.
Matrix image(const Matrix& n, const Matrix& subspace);
/// {x : N x in U}.
Matrix preimage(const Matrix& n, const Matrix& subspace);

}  // namespace qmirror
