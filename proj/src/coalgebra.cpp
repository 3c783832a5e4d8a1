#include "comax/coalgebra.hpp"

#include <algorithm>
#include <map>

#include "comax/algebra.hpp"

namespace comax {

void Coalgebra::sort_terms() {
    for (auto& ts : delta)
        std::sort(ts.begin(), ts.end(), [](const DeltaTerm& x, const DeltaTerm& y) {
            return std::pair(x.left, x.right) < std::pair(y.left, y.right);
        });
}

bool Coalgebra::operator==(const Coalgebra& o) const {
    if (field != o.field || labels != o.labels || eps != o.eps) return false;
    if (delta.size() != o.delta.size()) return false;
    for (size_t i = 0; i < delta.size(); ++i) {
        if (delta[i].size() != o.delta[i].size()) return false;
        for (size_t t = 0; t < delta[i].size(); ++t) {
            const DeltaTerm &x = delta[i][t], &y = o.delta[i][t];
            if (x.left != y.left || x.right != y.right || x.coeff != y.coeff) return false;
        }
    }
    return true;
}

Mat Coalgebra::delta_of(const Mat& v) const {
    const int n = dim();
    Mat out(field, n * n, 1);
    for (int c = 0; c < n; ++c) {
        if (sgn(v.at(c, 0)) == 0) continue;
        for (const DeltaTerm& t : delta[c]) {
            int idx = t.left * n + t.right;
            out.at(idx, 0) = field.add(out.at(idx, 0), field.mul(v.at(c, 0), t.coeff));
        }
    }
    return out;
}

Scalar Coalgebra::eps_of(const Mat& v) const {
    Scalar s(0);
    for (int c = 0; c < dim(); ++c) s = field.add(s, field.mul(v.at(c, 0), eps[c]));
    return s;
}

namespace {

using Triple = std::map<std::tuple<int, int, int>, Scalar>;

void triple_add(const FieldSpec& f, Triple& m, int i, int j, int k, const Scalar& c) {
    auto key = std::tuple(i, j, k);
    auto it = m.find(key);
    if (it == m.end())
        m.emplace(key, c);
    else {
        it->second = f.add(it->second, c);
        if (sgn(it->second) == 0) m.erase(it);
    }
}

} // namespace

ValidationReport validate_coalgebra(const Coalgebra& c) {
    const int n = c.dim();
    const FieldSpec f = c.field;
    if (int(c.delta.size()) != n || int(c.eps.size()) != n)
        return {false, "structure constant tables do not match the dimension"};

    for (int b = 0; b < n; ++b) {
        for (const DeltaTerm& t : c.delta[b])
            if (t.left < 0 || t.left >= n || t.right < 0 || t.right >= n)
                return {false, "delta index out of range at basis element " + c.labels[b]};

        // (Delta (x) id)Delta vs (id (x) Delta)Delta
        Triple lhs, rhs;
        for (const DeltaTerm& t : c.delta[b]) {
            for (const DeltaTerm& u : c.delta[t.left])
                triple_add(f, lhs, u.left, u.right, t.right, f.mul(t.coeff, u.coeff));
            for (const DeltaTerm& u : c.delta[t.right])
                triple_add(f, rhs, t.left, u.left, u.right, f.mul(t.coeff, u.coeff));
        }
        if (lhs != rhs)
            return {false, "coassociativity fails at basis element " + c.labels[b]};

        // counit laws
        std::vector<Scalar> left(n, Scalar(0)), right(n, Scalar(0));
        for (const DeltaTerm& t : c.delta[b]) {
            left[t.right] = f.add(left[t.right], f.mul(t.coeff, c.eps[t.left]));
            right[t.left] = f.add(right[t.left], f.mul(t.coeff, c.eps[t.right]));
        }
        for (int i = 0; i < n; ++i) {
            Scalar want = i == b ? f.one() : f.zero();
            if (left[i] != want) return {false, "left counit law fails at " + c.labels[b]};
            if (right[i] != want) return {false, "right counit law fails at " + c.labels[b]};
        }
    }
    return {};
}

bool is_cocommutative(const Coalgebra& c) {
    for (int b = 0; b < c.dim(); ++b) {
        std::map<std::pair<int, int>, Scalar> fwd;
        for (const DeltaTerm& t : c.delta[b]) fwd[{t.left, t.right}] = t.coeff;
        for (const DeltaTerm& t : c.delta[b]) {
            auto it = fwd.find({t.right, t.left});
            if (it == fwd.end() || it->second != t.coeff) return false;
        }
        // swapped terms missing from fwd
        for (const auto& [key, val] : fwd)
            if (!fwd.count({key.second, key.first})) return false;
    }
    return true;
}

Coalgebra path_coalgebra(const Quiver& q, std::optional<int> max_len, FieldSpec field) {
    std::vector<Path> paths = enumerate_paths(q, max_len);
    Coalgebra c;
    c.field = field;
    const int n = int(paths.size());
    std::map<std::pair<int, std::vector<int>>, int> index; // (start, arrows) -> basis index
    for (int i = 0; i < n; ++i) index[{paths[i].start, paths[i].arrows}] = i;

    c.labels.reserve(n);
    c.delta.resize(n);
    c.eps.resize(n, field.zero());
    for (int i = 0; i < n; ++i) {
        const Path& w = paths[i];
        c.labels.push_back(path_label(q, w));
        c.eps[i] = w.trivial() ? field.one() : field.zero();
        // Delta(w) = sum over splits w = u v, trivial end factors included.
        for (int cut = 0; cut <= w.length(); ++cut) {
            std::vector<int> ua(w.arrows.begin(), w.arrows.begin() + cut);
            std::vector<int> va(w.arrows.begin() + cut, w.arrows.end());
            int ustart = w.start;
            int uend = cut == 0 ? w.start : q.arrows[ua.back()].tgt;
            auto ui = index.find({ustart, ua});
            auto vi = index.find({uend, va});
            require(ui != index.end() && vi != index.end(), ErrorKind::Internal,
                    "path factor missing from the basis");
            c.delta[i].push_back({ui->second, vi->second, field.one()});
        }
    }
    c.sort_terms();
    return c;
}

Coalgebra matrix_coalgebra(FieldSpec field, int n) {
    require(n >= 1, ErrorKind::InvalidArgument, "matrix coalgebra needs n >= 1");
    Coalgebra c;
    c.field = field;
    auto idx = [n](int i, int j) { return i * n + j; };
    c.delta.resize(size_t(n) * n);
    c.eps.resize(size_t(n) * n, field.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            for (int l = 0; l < n; ++l)
                c.delta[idx(i, j)].push_back({idx(i, l), idx(l, j), field.one()});
            c.eps[idx(i, j)] = i == j ? field.one() : field.zero();
        }
    c.sort_terms();
    return c;
}

Coalgebra truncated_divided_power(FieldSpec field, int n) {
    require(n >= 1, ErrorKind::InvalidArgument, "divided power truncation needs n >= 1");
    Quiver loop;
    loop.vertices = {"1"};
    loop.arrows = {{"x", 0, 0}};
    return path_coalgebra(loop, n - 1, field);
}

Coalgebra direct_sum_coalgebra(const std::vector<Coalgebra>& cs) {
    require(!cs.empty(), ErrorKind::InvalidArgument, "empty direct sum");
    Coalgebra out;
    out.field = cs[0].field;
    if (cs.size() == 1) return cs[0];
    int offset = 0;
    for (size_t s = 0; s < cs.size(); ++s) {
        const Coalgebra& c = cs[s];
        require(c.field == out.field, ErrorKind::FieldMismatch,
                "direct sum over mixed fields");
        for (int i = 0; i < c.dim(); ++i) {
            out.labels.push_back("s" + std::to_string(s) + ":" + c.labels[i]);
            std::vector<DeltaTerm> ts;
            for (const DeltaTerm& t : c.delta[i])
                ts.push_back({t.left + offset, t.right + offset, t.coeff});
            out.delta.push_back(std::move(ts));
            out.eps.push_back(c.eps[i]);
        }
        offset += c.dim();
    }
    out.sort_terms();
    return out;
}

Algebra dual_algebra(const Coalgebra& c) {
    const int n = c.dim();
    Algebra a;
    a.field = c.field;
    a.labels.reserve(n);
    for (const auto& l : c.labels) a.labels.push_back(l + "^");
    a.mult.assign(size_t(n) * n, {});
    for (int k = 0; k < n; ++k)
        for (const DeltaTerm& t : c.delta[k])
            a.mult[size_t(t.left) * n + t.right].push_back({k, t.coeff});
    a.unit = c.eps;
    a.sort_terms();
    return a;
}

Subspace coradical(const Coalgebra& c) {
    Algebra a = dual_algebra(c);
    Subspace rad = jacobson_radical(a);
    if (rad.is_zero()) return Subspace::full(c.field, c.dim());
    // Dual-basis pairing: f(v) = sum f_i v_i, so C0 = ker(radical basis matrix).
    return kernel_basis(rad.basis);
}

} // namespace comax
