#pragma once

#include <optional>
#include <vector>

#include "comax/field.hpp"

namespace comax {

/// Dense row-major matrix over a fixed field. All arithmetic is exact.
struct Mat {
    FieldSpec field;
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> e; // rows * cols entries, row-major

    Mat() = default;
    Mat(FieldSpec f, int r, int c) : field(f), rows(r), cols(c), e(size_t(r) * size_t(c), Scalar(0)) {}

    static Mat zero(FieldSpec f, int r, int c) { return Mat(f, r, c); }
    static Mat identity(FieldSpec f, int n);
    /// Builds from integer rows (normalised into the field).
    static Mat from_int_rows(FieldSpec f, const std::vector<std::vector<long>>& data);
    static Mat col_vector(FieldSpec f, const std::vector<Scalar>& v);
    static Mat row_vector(FieldSpec f, const std::vector<Scalar>& v);
    /// Standard basis column e_i.
    static Mat unit_col(FieldSpec f, int n, int i);

    Scalar& at(int r, int c) { return e[size_t(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return e[size_t(r) * cols + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Mat& o) const;

    Mat transpose() const;
    Mat col(int j) const;
    Mat row(int i) const;
    std::vector<Scalar> col_as_vec(int j) const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    Mat scaled(const Scalar& c) const;
};

struct RrefResult {
    Mat m;
    std::vector<int> pivots; // pivot column per nonzero row
    int rank = 0;
};

/// Reduced row echelon form; dispatches to the OpenMP kernel for large
/// matrices and the serial one otherwise. Exact over the field.
RrefResult rref(const Mat& m);
int rank(const Mat& m);

Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);

/// Particular solution X of A·X = B (free variables set to 0), or nullopt
/// when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

namespace detail {
// Serial reference kernels, kept separately so the OpenMP paths can be
// checked against them (and benchmarked).
RrefResult rref_serial(Mat m);
RrefResult rref_parallel(Mat m);
Mat mul_serial(const Mat& a, const Mat& b);
Mat mul_parallel(const Mat& a, const Mat& b);
} // namespace detail

} // namespace comax
