#pragma once

#include "qmirror/linalg.hpp"

#include <map>
#include <string>

namespace qmirror {

/// Increasing filtration of Q^n. steps[k] is the filter at index k; between
/// listed indices the filter is constant, below the first it is zero.
struct Filtration {
    int dim = 0;
    std::map<int, Matrix> steps;

    /// The filter F_k as a subspace.
    Matrix at(int k) const;
    /// dim F_k
    int dim_at(int k) const { return qmirror::dim(at(k)); }
    friend bool operator==(const Filtration& a, const Filtration& b);
};

/// Pure filtration: zero below w, everything from w on.
Filtration pure_filtration(int dim, int weight);

/// Monodromy weight filtration of nilpotent N centered at w.
Filtration monodromy_weight_filtration(const Matrix& n, int center);

/// Relative monodromy filtration M(N, W): N M_k in M_{k-2}, and M induces on
/// each gr^W_k the monodromy weight filtration centered at k.
/// Throws Admissibility when no such filtration exists.
Filtration relative_weight_filtration(const Matrix& n, const Filtration& w);

/// Checks N M_k in M_{k-2} for all k.
bool lowers_by_two(const Matrix& n, const Filtration& m);

}  // namespace qmirror
