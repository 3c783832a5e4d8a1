#include "comax/subspace.hpp"

#include <algorithm>

namespace comax {

Subspace Subspace::from_span(const Mat& rows) {
    RrefResult rr = rref(rows);
    Subspace s;
    s.ambient_dim = rows.cols;
    s.basis = Mat(rows.field, rr.rank, rows.cols);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = rr.m.at(i, j);
    return s;
}

bool Subspace::contains_vector(const Mat& v) const {
    require(v.rows == ambient_dim && v.cols == 1, ErrorKind::AmbientMismatch,
            "vector/ambient dimension mismatch");
    // Reduce v by the RREF rows; membership iff the residual vanishes.
    Mat r = v;
    const FieldSpec f = basis.field;
    for (int i = 0; i < basis.rows; ++i) {
        // pivot column of row i = first nonzero entry
        int pc = -1;
        for (int j = 0; j < ambient_dim; ++j)
            if (sgn(basis.at(i, j)) != 0) {
                pc = j;
                break;
            }
        const Scalar c = r.at(pc, 0);
        if (sgn(c) == 0) continue;
        for (int j = pc; j < ambient_dim; ++j)
            r.at(j, 0) = f.sub(r.at(j, 0), f.mul(c, basis.at(i, j)));
    }
    return r.is_zero();
}

Mat Subspace::coords_of(const Mat& v) const {
    require(contains_vector(v), ErrorKind::InvalidArgument, "vector outside the subspace");
    // With an RREF basis the coordinates can be read off at the pivots.
    Mat c(basis.field, dim(), 1);
    for (int i = 0; i < basis.rows; ++i) {
        int pc = -1;
        for (int j = 0; j < ambient_dim; ++j)
            if (sgn(basis.at(i, j)) != 0) {
                pc = j;
                break;
            }
        c.at(i, 0) = v.at(pc, 0);
    }
    return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == b.ambient_dim, ErrorKind::AmbientMismatch,
            "subspace sum: ambient dims differ");
    return Subspace::from_span(vstack(a.basis, b.basis));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == b.ambient_dim, ErrorKind::AmbientMismatch,
            "subspace intersection: ambient dims differ");
    const int n = a.ambient_dim;
    const FieldSpec f = a.basis.field;
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left block carry an
    // intersection basis in the right block.
    Mat top = hstack(a.basis, a.basis);
    Mat bot = hstack(b.basis, Mat::zero(f, b.basis.rows, n));
    RrefResult rr = rref(vstack(top, bot));
    Mat picked(f, 0, n);
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (sgn(rr.m.at(i, j)) != 0) left_zero = false;
        if (!left_zero) continue;
        Mat r(f, 1, n);
        for (int j = 0; j < n; ++j) r.at(0, j) = rr.m.at(i, n + j);
        picked = picked.rows == 0 ? r : vstack(picked, r);
    }
    return Subspace::from_span(picked.rows == 0 ? Mat(f, 0, n) : picked);
}

bool is_contained(const Subspace& a, const Subspace& b) {
    require(a.ambient_dim == b.ambient_dim, ErrorKind::AmbientMismatch,
            "containment: ambient dims differ");
    for (int i = 0; i < a.basis.rows; ++i)
        if (!b.contains_vector(a.basis.row(i).transpose())) return false;
    return true;
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    SubspaceOps r;
    r.sum = sum(a, b);
    r.intersection = intersect(a, b);
    r.contains = is_contained(a, b);
    return r;
}

std::vector<Mat> enumerate_vectors(FieldSpec f, int n, long max_vectors) {
    require(!f.is_rational(), ErrorKind::InvalidArgument, "vector enumeration needs a finite field");
    const long p = long(f.characteristic);
    double total = 1;
    for (int i = 0; i < n; ++i) total *= double(p);
    require(total <= double(max_vectors), ErrorKind::TooLarge,
            "p^dim exceeds the enumeration guard");
    std::vector<Mat> out;
    long count = long(total);
    for (long idx = 0; idx < count; ++idx) {
        Mat v(f, n, 1);
        long rest = idx;
        for (int i = 0; i < n; ++i) {
            v.at(i, 0) = Scalar(rest % p);
            rest /= p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {
// span of s + {v}, closed under all ops
Subspace invariant_closure(const Subspace& s, const Mat& v, const std::vector<Mat>& ops) {
    Mat rows = s.basis.rows == 0 ? v.transpose() : vstack(s.basis, v.transpose());
    Subspace cur = Subspace::from_span(rows);
    for (;;) {
        Mat ext = cur.basis;
        for (const Mat& op : ops)
            for (int i = 0; i < cur.dim(); ++i)
                ext = vstack(ext, (op * cur.basis_col(i)).transpose());
        Subspace next = Subspace::from_span(ext);
        if (next.dim() == cur.dim()) return next;
        cur = next;
    }
}

std::vector<Scalar> subspace_key(const Subspace& s) { return s.basis.e; }
} // namespace

std::vector<Subspace> enumerate_invariant_subspaces(FieldSpec f, int n, const std::vector<Mat>& ops,
                                                    long max_vectors) {
    std::vector<Mat> vecs = enumerate_vectors(f, n, max_vectors);
    std::vector<Subspace> found{Subspace::zero(f, n)};
    std::vector<std::vector<Scalar>> keys{subspace_key(found[0])};
    size_t scan = 0;
    while (scan < found.size()) {
        Subspace s = found[scan++];
        for (const Mat& v : vecs) {
            if (v.is_zero() || s.contains_vector(v)) continue;
            Subspace t = invariant_closure(s, v, ops);
            auto key = subspace_key(t);
            bool known = false;
            for (const auto& k : keys)
                if (k == key) {
                    known = true;
                    break;
                }
            if (!known) {
                keys.push_back(key);
                found.push_back(t);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (size_t i = 0; i < a.basis.e.size(); ++i) {
            if (a.basis.e[i] != b.basis.e[i]) return a.basis.e[i] < b.basis.e[i];
        }
        return false;
    });
    return found;
}

Subspace kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    const FieldSpec f = m.field;
    const int n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    Mat span(f, n - rr.rank, n);
    int k = 0;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        // kernel vector for free column j
        span.at(k, j) = 1;
        for (int r = 0; r < rr.rank; ++r) span.at(k, rr.pivots[r]) = f.neg(rr.m.at(r, j));
        ++k;
    }
    return Subspace::from_span(span);
}

} // namespace comax
