#pragma once

#include <memory>
#include <string>
#include <vector>

#include "comax/coalgebra.hpp"
#include "comax/quiver.hpp"
#include "comax/subspace.hpp"

namespace comax {

/// Summand of a product: coeff * b_idx.
struct MultTerm {
    int idx = 0;
    Scalar coeff;
    bool operator==(const MultTerm& o) const { return idx == o.idx && coeff == o.coeff; }
};

/// Finite-dimensional associative unital algebra by structure constants.
struct Algebra {
    FieldSpec field;
    std::vector<std::string> labels;
    /// mult[a * dim + b] = expansion of b_a * b_b, sorted by idx.
    std::vector<std::vector<MultTerm>> mult;
    std::vector<Scalar> unit;

    int dim() const { return int(labels.size()); }
    const std::vector<MultTerm>& terms(int a, int b) const { return mult[size_t(a) * dim() + b]; }

    /// x * y for column coordinate vectors.
    Mat multiply(const Mat& x, const Mat& y) const;
    /// Matrix of left multiplication by x (column coords).
    Mat left_mult(const Mat& x) const;
    Mat right_mult(const Mat& x) const;
    Mat left_mult_basis(int i) const;
    Mat right_mult_basis(int i) const;
    Mat unit_vec() const { return Mat::col_vector(field, unit); }
    Mat basis_vec(int i) const { return Mat::unit_col(field, dim(), i); }

    void sort_terms();
    bool operator==(const Algebra&) const;
};

/// Associativity on all basis triples and the unit laws, exactly.
ValidationReport validate_algebra(const Algebra& a);

/// Transposes the multiplication tensor: delta[c][a,b] = mult[a,b -> c].
Coalgebra dual_coalgebra_of_algebra(const Algebra& a);

/// Jacobson radical. Dickson trace-form criterion in characteristic 0 or
/// p > dim; exact nilpotent-ideal enumeration for small prime fields;
/// UnsupportedCharacteristic otherwise.
Subspace jacobson_radical(const Algebra& a);

Subspace center(const Algebra& a);

/// Complete orthogonal set of primitive idempotents (split algebras).
std::vector<Mat> primitive_idempotents(const Algebra& a);

struct WedderburnData {
    bool is_semisimple = false;
    int block_count = 0;
    std::vector<int> block_dims; // dims of the simple blocks of a/J, descending
};
WedderburnData wedderburn_blocks(const Algebra& a);

/// J = 0 and a single Wedderburn block. For artinian algebras this is also
/// the primeness test.
bool is_simple(const Algebra& a);

/// Basis = paths; product = concatenation when composable, else 0.
Algebra path_algebra(const Quiver& q, FieldSpec field = FieldSpec::rationals());

/// The 5-dimensional triangular matrix algebra (k 0; R R) with R = k[x]/(x^2),
/// basis {e1, e2, r, m, rm}. Right non-singular but not right hereditary.
Algebra triangular_example_algebra(FieldSpec field = FieldSpec::rationals());

Algebra opposite_algebra(const Algebra& a);

/// Quotient by a two-sided ideal, with projection and a linear section.
struct QuotientAlgebra {
    Algebra quotient;
    Mat projection; // dim(quotient) x dim(a)
    Mat section;    // dim(a) x dim(quotient)
};
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

// Small helpers used across modules.
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);
bool is_nilpotent_subspace(const Algebra& a, const Subspace& s);

} // namespace comax
