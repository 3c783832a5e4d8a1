#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comax/quiver.hpp"
#include "comax/subspace.hpp"

namespace comax {

struct Algebra; // algebra.hpp

/// Summand of a comultiplication: coeff * (b_left (x) b_right).
struct DeltaTerm {
    int left = 0;
    int right = 0;
    Scalar coeff;
    bool operator==(const DeltaTerm& o) const {
        return left == o.left && right == o.right && coeff == o.coeff;
    }
};

/// Finite-dimensional coalgebra by structure constants:
/// Delta(b_c) = sum over delta[c] of coeff * b_left (x) b_right.
struct Coalgebra {
    FieldSpec field;
    std::vector<std::string> labels;
    std::vector<std::vector<DeltaTerm>> delta; // per basis index, sorted by (left,right)
    std::vector<Scalar> eps;

    int dim() const { return int(labels.size()); }
    /// Delta of a column vector, returned as a dim*dim column in
    /// tensor coordinates (index = left*dim + right).
    Mat delta_of(const Mat& v) const;
    Scalar eps_of(const Mat& v) const;
    void sort_terms();
    bool operator==(const Coalgebra&) const;
};

struct ValidationReport {
    bool ok = true;
    std::string message; // names the first failing basis element and axiom
};

/// Coassociativity and counit laws on every basis element, exactly.
ValidationReport validate_coalgebra(const Coalgebra& c);

bool is_cocommutative(const Coalgebra& c);

/// Basis = paths of the quiver; Delta(w) = sum over factorisations w = uv.
Coalgebra path_coalgebra(const Quiver& q, std::optional<int> max_len = std::nullopt,
                         FieldSpec field = FieldSpec::rationals());

/// Dual of the n x n matrix algebra: Delta(E_ij) = sum_l E_il (x) E_lj.
Coalgebra matrix_coalgebra(FieldSpec field, int n);

/// Basis 1, x, ..., x^{n-1}; identical to the path coalgebra of a loop with
/// max_len = n-1 (same basis order, same structure constants).
Coalgebra truncated_divided_power(FieldSpec field, int n);

Coalgebra direct_sum_coalgebra(const std::vector<Coalgebra>& cs);

/// Convolution dual: mult[a,b -> c] = delta[c][a,b], unit = eps.
Algebra dual_algebra(const Coalgebra& c);

/// C0 = annihilator in C of Jac(C*) under the evaluation pairing.
Subspace coradical(const Coalgebra& c);

} // namespace comax
