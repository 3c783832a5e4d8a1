#include "comax/mat.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace comax {

namespace {
// Below this many entries the OpenMP kernels are pure overhead.
constexpr size_t kParallelCutoff = 1 << 14;

void check_field(const Mat& a, const Mat& b) {
    require(a.field == b.field, ErrorKind::FieldMismatch, "matrices over different fields");
}
} // namespace

Mat Mat::identity(FieldSpec f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_int_rows(FieldSpec f, const std::vector<std::vector<long>>& data) {
    int r = int(data.size());
    int c = r == 0 ? 0 : int(data[0].size());
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        require(int(data[i].size()) == c, ErrorKind::InvalidArgument, "ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = f.from_long(data[i][j]);
    }
    return m;
}

Mat Mat::col_vector(FieldSpec f, const std::vector<Scalar>& v) {
    Mat m(f, int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
    return m;
}

Mat Mat::row_vector(FieldSpec f, const std::vector<Scalar>& v) {
    Mat m(f, 1, int(v.size()));
    m.e = v;
    return m;
}

Mat Mat::unit_col(FieldSpec f, int n, int i) {
    Mat m(f, n, 1);
    m.at(i, 0) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e)
        if (sgn(x) != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && e == o.e;
}

Mat Mat::transpose() const {
    Mat t(field, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::col(int j) const {
    Mat c(field, rows, 1);
    for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Mat Mat::row(int i) const {
    Mat r(field, 1, cols);
    for (int j = 0; j < cols; ++j) r.at(0, j) = at(i, j);
    return r;
}

std::vector<Scalar> Mat::col_as_vec(int j) const {
    std::vector<Scalar> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

Mat operator+(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.same_shape(b), ErrorKind::InvalidArgument, "shape mismatch in +");
    Mat r(a.field, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.field.add(a.e[i], b.e[i]);
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.same_shape(b), ErrorKind::InvalidArgument, "shape mismatch in -");
    Mat r(a.field, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.field.sub(a.e[i], b.e[i]);
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r(field, rows, cols);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = field.mul(e[i], c);
    return r;
}

namespace detail {

Mat mul_serial(const Mat& a, const Mat& b) {
    Mat r(a.field, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (sgn(bkj) == 0) continue;
                r.at(i, j) = a.field.add(r.at(i, j), a.field.mul(aik, bkj));
            }
        }
    return r;
}

Mat mul_parallel(const Mat& a, const Mat& b) {
    Mat r(a.field, a.rows, b.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (sgn(bkj) == 0) continue;
                r.at(i, j) = a.field.add(r.at(i, j), a.field.mul(aik, bkj));
            }
        }
    return r;
}

namespace {

// Scales row `piv` to leading 1 and eliminates column `col` from every other
// row. Row updates are independent, which is what the parallel path exploits.
template <bool Parallel>
void eliminate(Mat& m, int piv, int col) {
    const FieldSpec f = m.field;
    const Scalar lead = m.at(piv, col);
    if (!FieldSpec::is_one(lead)) {
        Scalar li = f.inv(lead);
        for (int j = col; j < m.cols; ++j) m.at(piv, j) = f.mul(m.at(piv, j), li);
    }
    auto update_row = [&](int i) {
        if (i == piv) return;
        const Scalar c = m.at(i, col);
        if (sgn(c) == 0) return;
        m.at(i, col) = 0;
        for (int j = col + 1; j < m.cols; ++j) {
            if (sgn(m.at(piv, j)) == 0) continue;
            m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(piv, j)));
        }
    };
    if constexpr (Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (int i = 0; i < m.rows; ++i) update_row(i);
    } else {
        for (int i = 0; i < m.rows; ++i) update_row(i);
    }
}

template <bool Parallel>
RrefResult rref_impl(Mat m) {
    RrefResult res;
    res.pivots.reserve(std::min(m.rows, m.cols));
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m.at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        eliminate<Parallel>(m, r, c);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

} // namespace

RrefResult rref_serial(Mat m) { return rref_impl<false>(std::move(m)); }
RrefResult rref_parallel(Mat m) { return rref_impl<true>(std::move(m)); }

} // namespace detail

Mat operator*(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.cols == b.rows, ErrorKind::InvalidArgument, "shape mismatch in *");
    if (a.e.size() + b.e.size() >= kParallelCutoff) return detail::mul_parallel(a, b);
    return detail::mul_serial(a, b);
}

RrefResult rref(const Mat& m) {
    if (m.e.size() >= kParallelCutoff) return detail::rref_parallel(m);
    return detail::rref_serial(m);
}

int rank(const Mat& m) { return rref(m).rank; }

Mat vstack(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.cols == b.cols, ErrorKind::InvalidArgument, "vstack column mismatch");
    Mat r(a.field, a.rows + b.rows, a.cols);
    std::copy(a.e.begin(), a.e.end(), r.e.begin());
    std::copy(b.e.begin(), b.e.end(), r.e.begin() + a.e.size());
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.rows == b.rows, ErrorKind::InvalidArgument, "hstack row mismatch");
    Mat r(a.field, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    check_field(a, b);
    Mat r(a.field, a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (sgn(a.at(i, j)) == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    r.at(i * b.rows + k, j * b.cols + l) = a.field.mul(a.at(i, j), b.at(k, l));
        }
    return r;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    check_field(a, b);
    require(a.rows == b.rows, ErrorKind::InvalidArgument, "solve row mismatch");
    RrefResult rr = rref(hstack(a, b));
    // Inconsistent iff some pivot lands in the b-block.
    for (int p : rr.pivots)
        if (p >= a.cols) return std::nullopt;
    Mat x(a.field, a.cols, b.cols);
    for (int r = 0; r < rr.rank; ++r) {
        int pc = rr.pivots[r];
        for (int j = 0; j < b.cols; ++j) x.at(pc, j) = rr.m.at(r, a.cols + j);
    }
    return x;
}

} // namespace comax
