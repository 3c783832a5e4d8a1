#pragma once

#include "comax/mat.hpp"

namespace comax {

/// Subspace of k^n, stored as the unique RREF row basis. Two subspaces are
/// equal iff their basis matrices are entry-wise equal.
struct Subspace {
    int ambient_dim = 0;
    Mat basis; // RREF, one basis vector per row, full row rank

    static Subspace zero(FieldSpec f, int ambient) {
        Subspace s;
        s.ambient_dim = ambient;
        s.basis = Mat(f, 0, ambient);
        return s;
    }
    static Subspace full(FieldSpec f, int ambient) {
        Subspace s;
        s.ambient_dim = ambient;
        s.basis = Mat::identity(f, ambient);
        return s;
    }
    /// Canonicalises an arbitrary spanning set (rows) into RREF form.
    static Subspace from_span(const Mat& rows);
    /// Span of a list of column vectors.
    static Subspace from_cols(const Mat& cols) { return from_span(cols.transpose()); }

    FieldSpec field() const { return basis.field; }
    int dim() const { return basis.rows; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim; }
    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }

    bool contains_vector(const Mat& col_vec) const;
    /// Coordinates of a member column vector in the RREF basis.
    Mat coords_of(const Mat& col_vec) const;
    /// i-th basis vector as a column.
    Mat basis_col(int i) const { return basis.row(i).transpose(); }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// a subseteq b
bool is_contained(const Subspace& a, const Subspace& b);

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool contains = false; // a subseteq b
};
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

/// RREF basis of { v : m v = 0 }.
Subspace kernel_basis(const Mat& m);

/// All subspaces of F_p^n stable under every matrix in `ops`, by closing
/// single-vector extensions of known stable subspaces under span and the
/// operators. Deterministic output order: (dim, basis entries). Guarded by
/// p^n <= max_vectors (TooLarge beyond), prime fields only.
std::vector<Subspace> enumerate_invariant_subspaces(FieldSpec f, int n, const std::vector<Mat>& ops,
                                                    long max_vectors = 1 << 16);

/// All p^n column vectors of F_p^n in a fixed order (index digits, little
/// endian). Same guard as above.
std::vector<Mat> enumerate_vectors(FieldSpec f, int n, long max_vectors = 1 << 16);

} // namespace comax
