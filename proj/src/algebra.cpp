#include "comax/algebra.hpp"

#include <algorithm>
#include <map>

namespace comax {

void Algebra::sort_terms() {
    for (auto& ts : mult)
        std::sort(ts.begin(), ts.end(),
                  [](const MultTerm& x, const MultTerm& y) { return x.idx < y.idx; });
}

bool Algebra::operator==(const Algebra& o) const {
    if (field != o.field || labels != o.labels || unit != o.unit) return false;
    if (mult.size() != o.mult.size()) return false;
    for (size_t i = 0; i < mult.size(); ++i) {
        if (mult[i].size() != o.mult[i].size()) return false;
        for (size_t t = 0; t < mult[i].size(); ++t)
            if (mult[i][t].idx != o.mult[i][t].idx || mult[i][t].coeff != o.mult[i][t].coeff)
                return false;
    }
    return true;
}

Mat Algebra::multiply(const Mat& x, const Mat& y) const {
    const int n = dim();
    Mat out(field, n, 1);
    for (int i = 0; i < n; ++i) {
        if (sgn(x.at(i, 0)) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y.at(j, 0)) == 0) continue;
            Scalar c = field.mul(x.at(i, 0), y.at(j, 0));
            for (const MultTerm& t : terms(i, j))
                out.at(t.idx, 0) = field.add(out.at(t.idx, 0), field.mul(c, t.coeff));
        }
    }
    return out;
}

Mat Algebra::left_mult_basis(int i) const {
    const int n = dim();
    Mat m(field, n, n);
    for (int j = 0; j < n; ++j)
        for (const MultTerm& t : terms(i, j)) m.at(t.idx, j) = field.add(m.at(t.idx, j), t.coeff);
    return m;
}

Mat Algebra::right_mult_basis(int i) const {
    const int n = dim();
    Mat m(field, n, n);
    for (int j = 0; j < n; ++j)
        for (const MultTerm& t : terms(j, i)) m.at(t.idx, j) = field.add(m.at(t.idx, j), t.coeff);
    return m;
}

Mat Algebra::left_mult(const Mat& x) const {
    const int n = dim();
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x.at(i, 0)) == 0) continue;
        for (int j = 0; j < n; ++j)
            for (const MultTerm& t : terms(i, j))
                m.at(t.idx, j) = field.add(m.at(t.idx, j), field.mul(x.at(i, 0), t.coeff));
    }
    return m;
}

Mat Algebra::right_mult(const Mat& x) const {
    const int n = dim();
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) {
        if (sgn(x.at(i, 0)) == 0) continue;
        for (int j = 0; j < n; ++j)
            for (const MultTerm& t : terms(j, i))
                m.at(t.idx, j) = field.add(m.at(t.idx, j), field.mul(x.at(i, 0), t.coeff));
    }
    return m;
}

ValidationReport validate_algebra(const Algebra& a) {
    const int n = a.dim();
    if (a.mult.size() != size_t(n) * n || int(a.unit.size()) != n)
        return {false, "structure constant tables do not match the dimension"};
    for (const auto& ts : a.mult)
        for (const MultTerm& t : ts)
            if (t.idx < 0 || t.idx >= n) return {false, "product index out of range"};

    Mat one = a.unit_vec();
    for (int i = 0; i < n; ++i) {
        Mat bi = a.basis_vec(i);
        if (!(a.multiply(one, bi) == bi))
            return {false, "left unit law fails at " + a.labels[i]};
        if (!(a.multiply(bi, one) == bi))
            return {false, "right unit law fails at " + a.labels[i]};
    }
    for (int i = 0; i < n; ++i) {
        Mat bi = a.basis_vec(i);
        for (int j = 0; j < n; ++j) {
            Mat bj = a.basis_vec(j);
            Mat ij = a.multiply(bi, bj);
            for (int k = 0; k < n; ++k) {
                Mat bk = a.basis_vec(k);
                if (!(a.multiply(ij, bk) == a.multiply(bi, a.multiply(bj, bk))))
                    return {false, "associativity fails at (" + a.labels[i] + ", " + a.labels[j] +
                                       ", " + a.labels[k] + ")"};
            }
        }
    }
    return {};
}

Coalgebra dual_coalgebra_of_algebra(const Algebra& a) {
    const int n = a.dim();
    Coalgebra c;
    c.field = a.field;
    c.labels.reserve(n);
    for (const auto& l : a.labels) c.labels.push_back(l + "^");
    c.delta.resize(n);
    c.eps = a.unit;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const MultTerm& t : a.terms(i, j)) c.delta[t.idx].push_back({i, j, t.coeff});
    c.sort_terms();
    return c;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
    for (int k = 0; k < s.dim(); ++k) {
        Mat v = s.basis_col(k);
        for (int i = 0; i < a.dim(); ++i) {
            if (!s.contains_vector(a.multiply(a.basis_vec(i), v))) return false;
            if (!s.contains_vector(a.multiply(v, a.basis_vec(i)))) return false;
        }
    }
    return true;
}

bool is_nilpotent_subspace(const Algebra& a, const Subspace& s) {
    // valid for multiplicatively closed subspaces (ideals): powers descend
    Subspace cur = s;
    for (int step = 0; step <= a.dim() + 1; ++step) {
        if (cur.is_zero()) return true;
        Mat prods(a.field, 0, a.dim());
        for (int i = 0; i < cur.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j) {
                Mat p = a.multiply(cur.basis_col(i), s.basis_col(j));
                prods = prods.rows == 0 ? p.transpose() : vstack(prods, p.transpose());
            }
        Subspace next = prods.rows == 0 ? Subspace::zero(a.field, a.dim())
                                        : Subspace::from_span(prods);
        if (next == cur) return false;
        cur = next;
    }
    return cur.is_zero();
}

namespace {

Subspace radical_trace_form(const Algebra& a) {
    const int n = a.dim();
    std::vector<Mat> lm;
    lm.reserve(n);
    for (int i = 0; i < n; ++i) lm.push_back(a.left_mult_basis(i));
    Mat gram(a.field, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar tr(0);
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    if (sgn(lm[i].at(r, s)) == 0) continue;
                    if (sgn(lm[j].at(s, r)) == 0) continue;
                    tr = a.field.add(tr, a.field.mul(lm[i].at(r, s), lm[j].at(s, r)));
                }
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    return kernel_basis(gram);
}

// Largest nilpotent ideal by exhaustive enumeration; sound in any
// characteristic, used when the trace form is not.
Subspace radical_brute_force(const Algebra& a) {
    const int n = a.dim();
    std::vector<Mat> ops;
    for (int i = 0; i < n; ++i) {
        ops.push_back(a.left_mult_basis(i));
        ops.push_back(a.right_mult_basis(i));
    }
    std::vector<Subspace> ideals = enumerate_invariant_subspaces(a.field, n, ops, 1 << 12);
    Subspace rad = Subspace::zero(a.field, n);
    for (const Subspace& ideal : ideals)
        if (is_nilpotent_subspace(a, ideal)) rad = sum(rad, ideal);
    require(is_nilpotent_subspace(a, rad), ErrorKind::Internal,
            "sum of nilpotent ideals is not nilpotent");
    return rad;
}

} // namespace

Subspace jacobson_radical(const Algebra& a) {
    const unsigned long p = a.field.characteristic;
    if (p == 0 || long(p) > a.dim()) return radical_trace_form(a);
    double total = 1;
    for (int i = 0; i < a.dim(); ++i) total *= double(p);
    require(total <= double(1 << 12), ErrorKind::UnsupportedCharacteristic,
            "radical not computable: characteristic " + std::to_string(p) +
                " <= dim " + std::to_string(a.dim()) + " and dimension too large for enumeration");
    return radical_brute_force(a);
}

Subspace center(const Algebra& a) {
    const int n = a.dim();
    Mat sys(a.field, 0, n);
    for (int b = 0; b < n; ++b) {
        Mat d = a.right_mult_basis(b) - a.left_mult_basis(b);
        sys = sys.rows == 0 ? d : vstack(sys, d);
    }
    return kernel_basis(sys);
}

// ---------------------------------------------------------------------------
// primitive idempotents
// ---------------------------------------------------------------------------

namespace {

// Monic minimal polynomial of a square matrix, exactly (Krylov on powers).
std::vector<Scalar> minimal_polynomial(const Mat& m) {
    const FieldSpec f = m.field;
    const int n = m.rows;
    Mat power = Mat::identity(f, n);
    Mat stacked(f, 0, n * n);
    for (int d = 0;; ++d) {
        Mat vec(f, 1, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) vec.at(0, i * n + j) = power.at(i, j);
        Mat trial = stacked.rows == 0 ? vec : vstack(stacked, vec);
        if (rank(trial) <= stacked.rows) {
            // power_d depends on lower powers: solve for the coefficients
            auto sol = solve(stacked.transpose(), vec.transpose());
            require(sol.has_value(), ErrorKind::Internal, "minimal polynomial solve failed");
            std::vector<Scalar> poly(d + 1, f.zero());
            for (int i = 0; i < d; ++i) poly[i] = f.neg(sol->at(i, 0));
            poly[d] = f.one();
            return poly; // poly[0] + poly[1] t + ... + t^d
        }
        stacked = trial;
        power = power * m;
        require(d <= n, ErrorKind::Internal, "minimal polynomial did not terminate");
    }
}

Scalar eval_poly(const FieldSpec& f, const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar acc(0);
    for (int i = int(poly.size()) - 1; i >= 0; --i) acc = f.add(f.mul(acc, x), poly[i]);
    return acc;
}

std::vector<mpz_class> divisors_of(const mpz_class& v, const mpz_class& bound_guard) {
    mpz_class a = abs(v);
    std::vector<mpz_class> divs;
    require(a <= bound_guard, ErrorKind::NonSplit, "rational root search bound exceeded");
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            divs.push_back(a / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Roots of a minimal polynomial lying in the field. Exhaustive over F_p,
// rational-root candidates over Q.
std::vector<Scalar> roots_in_field(const FieldSpec& f, std::vector<Scalar> poly) {
    std::vector<Scalar> roots;
    if (!f.is_rational()) {
        require(f.characteristic <= (1ul << 16), ErrorKind::NonSplit,
                "residue root scan bound exceeded");
        for (unsigned long r = 0; r < f.characteristic; ++r) {
            Scalar x = f.from_long(long(r));
            if (FieldSpec::is_zero(eval_poly(f, poly, x))) roots.push_back(x);
        }
        return roots;
    }
    // strip zero roots
    size_t low = 0;
    while (low + 1 < poly.size() && FieldSpec::is_zero(poly[low])) ++low;
    if (low > 0) roots.push_back(Scalar(0));
    std::vector<Scalar> p(poly.begin() + low, poly.end());
    if (p.size() <= 1) return roots;
    // scale to a primitive integer polynomial
    mpz_class den(1);
    for (const Scalar& c : p) den = den * c.get_den() / gcd(mpz_class(den), c.get_den());
    std::vector<mpz_class> ip;
    for (const Scalar& c : p) ip.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    const mpz_class guard = mpz_class("1000000000000");
    for (const mpz_class& num : divisors_of(ip.front(), guard))
        for (const mpz_class& d : divisors_of(ip.back(), guard)) {
            for (int sign = -1; sign <= 1; sign += 2) {
                Scalar cand(sign * num, d);
                cand.canonicalize();
                if (FieldSpec::is_zero(eval_poly(f, p, cand))) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Multiplication-by-x operator restricted to an invariant subspace, in the
// coordinates of its RREF basis.
Mat restricted_left_mult(const Algebra& a, const Mat& x, const Subspace& v) {
    Mat m(a.field, v.dim(), v.dim());
    for (int j = 0; j < v.dim(); ++j) {
        Mat w = a.multiply(x, v.basis_col(j));
        Mat coords = v.coords_of(w);
        for (int i = 0; i < v.dim(); ++i) m.at(i, j) = coords.at(i, 0);
    }
    return m;
}

// Central primitive idempotents of a (semisimple, split) algebra: refine the
// center into common eigenspaces of its multiplication operators, then scale
// each line to an idempotent.
std::vector<Mat> central_primitive_idempotents(const Algebra& a) {
    const FieldSpec f = a.field;
    Subspace zc = center(a);
    std::vector<Subspace> blocks{zc};
    for (int zi = 0; zi < zc.dim(); ++zi) {
        Mat z = zc.basis_col(zi);
        std::vector<Subspace> next;
        for (const Subspace& v : blocks) {
            if (v.dim() == 1) {
                next.push_back(v);
                continue;
            }
            Mat m = restricted_left_mult(a, z, v);
            std::vector<Scalar> mp = minimal_polynomial(m);
            std::vector<Scalar> roots = roots_in_field(f, mp);
            int found = 0;
            for (const Scalar& lam : roots) {
                Mat shifted = m - Mat::identity(f, v.dim()).scaled(lam);
                Subspace eig = kernel_basis(shifted);
                if (eig.is_zero()) continue;
                // lift eigenvector coordinates back to ambient coordinates
                Mat rows = eig.basis * v.basis;
                Subspace sub = Subspace::from_span(rows);
                found += sub.dim();
                next.push_back(sub);
            }
            require(found == v.dim(), ErrorKind::NonSplit,
                    "central character does not split over the base field");
        }
        blocks = std::move(next);
    }
    std::vector<Mat> idems;
    for (const Subspace& v : blocks) {
        require(v.dim() == 1, ErrorKind::NonSplit,
                "center contains a field extension of the base field");
        Mat x = v.basis_col(0);
        Mat x2 = a.multiply(x, x);
        int nz = -1;
        for (int i = 0; i < a.dim() && nz < 0; ++i)
            if (sgn(x.at(i, 0)) != 0) nz = i;
        require(nz >= 0, ErrorKind::Internal, "zero central block");
        Scalar mu = f.div(x2.at(nz, 0), x.at(nz, 0));
        require(!FieldSpec::is_zero(mu) && x2 == x.scaled(mu), ErrorKind::NonSplit,
                "central block element is not split-scalar");
        idems.push_back(x.scaled(f.inv(mu)));
    }
    return idems;
}

Subspace corner_subspace(const Algebra& a, const Mat& e) {
    Mat rows(a.field, 0, a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        Mat v = a.multiply(e, a.multiply(a.basis_vec(i), e));
        rows = rows.rows == 0 ? v.transpose() : vstack(rows, v.transpose());
    }
    return Subspace::from_span(rows);
}

// Deterministic zero-divisor candidates inside the corner eBe.
std::vector<Mat> zero_divisor_candidates(const Algebra& a, const Subspace& s, const Mat& e) {
    const FieldSpec f = a.field;
    std::vector<Mat> cands;
    for (int i = 0; i < s.dim(); ++i) cands.push_back(s.basis_col(i));
    for (int i = 0; i < s.dim(); ++i)
        for (int j = i + 1; j < s.dim(); ++j) {
            cands.push_back(s.basis_col(i) + s.basis_col(j));
            cands.push_back(s.basis_col(i) - s.basis_col(j));
        }
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            cands.push_back(a.multiply(s.basis_col(i), s.basis_col(j)));
    // eigenvalue shifts b - lambda e
    for (int i = 0; i < s.dim(); ++i) {
        Mat b = s.basis_col(i);
        Mat m = restricted_left_mult(a, b, s);
        for (const Scalar& lam : roots_in_field(f, minimal_polynomial(m)))
            cands.push_back(b - e.scaled(lam));
    }
    return cands;
}

// Splits the unit e of the corner algebra eAe into orthogonal idempotents
// that are primitive (1-dimensional corners) in the split semisimple case.
void decompose_corner(const Algebra& a, const Mat& e, std::vector<Mat>& out) {
    Subspace s = corner_subspace(a, e);
    if (s.dim() == 1) {
        out.push_back(e);
        return;
    }
    // find a proper nonzero left ideal  S x  of the corner
    Subspace ideal = Subspace::zero(a.field, a.dim());
    bool found = false;
    for (const Mat& x : zero_divisor_candidates(a, s, e)) {
        if (x.is_zero()) continue;
        Mat rows(a.field, 0, a.dim());
        for (int i = 0; i < s.dim(); ++i) {
            Mat v = a.multiply(s.basis_col(i), x);
            rows = rows.rows == 0 ? v.transpose() : vstack(rows, v.transpose());
        }
        Subspace l = Subspace::from_span(rows);
        if (l.dim() > 0 && l.dim() < s.dim()) {
            ideal = l;
            found = true;
            break;
        }
    }
    require(found, ErrorKind::NonSplit,
            "no zero divisor found in a matrix block; the algebra may not split");
    // right identity u of the ideal: l_i u = l_i for all basis l_i
    const int ld = ideal.dim();
    Mat sys(a.field, 0, ld);
    Mat rhs(a.field, 0, 1);
    for (int i = 0; i < ld; ++i) {
        Mat row_block(a.field, a.dim(), ld);
        for (int k = 0; k < ld; ++k) {
            Mat prod = a.multiply(ideal.basis_col(i), ideal.basis_col(k));
            for (int r = 0; r < a.dim(); ++r) row_block.at(r, k) = prod.at(r, 0);
        }
        sys = sys.rows == 0 ? row_block : vstack(sys, row_block);
        rhs = rhs.rows == 0 ? ideal.basis_col(i) : vstack(rhs, ideal.basis_col(i));
    }
    auto sol = solve(sys, rhs);
    require(sol.has_value(), ErrorKind::NonSplit, "minimal ideal has no idempotent generator");
    Mat u(a.field, a.dim(), 1);
    for (int k = 0; k < ld; ++k) u = u + ideal.basis_col(k).scaled(sol->at(k, 0));
    require(a.multiply(u, u) == u && !u.is_zero() && !(u == e), ErrorKind::Internal,
            "right identity of a left ideal is not a proper idempotent");
    decompose_corner(a, u, out);
    decompose_corner(a, e - u, out);
}

} // namespace

std::vector<Mat> primitive_idempotents(const Algebra& a) {
    const FieldSpec f = a.field;
    Subspace rad = jacobson_radical(a);
    Mat one = a.unit_vec();

    // primitive idempotents of the semisimple quotient
    std::vector<Mat> prims_bar;
    Mat section = Mat::identity(f, a.dim());
    const Algebra* top = &a;
    Algebra quotient_storage;
    QuotientAlgebra qa;
    if (!rad.is_zero()) {
        qa = quotient_algebra(a, rad);
        quotient_storage = qa.quotient;
        top = &quotient_storage;
        section = qa.section;
    }
    for (const Mat& c : central_primitive_idempotents(*top)) decompose_corner(*top, c, prims_bar);

    if (rad.is_zero()) return prims_bar;

    // lift sequentially along the nilpotent radical, keeping orthogonality by
    // working in the corner (1-f)A(1-f); the last idempotent is 1 - f.
    std::vector<Mat> prims;
    Mat fsum(f, a.dim(), 1);
    for (size_t i = 0; i + 1 < prims_bar.size(); ++i) {
        Mat x = section * prims_bar[i];
        Mat g = one - fsum;
        x = a.multiply(g, a.multiply(x, g));
        int iter = 0;
        while (!(a.multiply(x, x) == x)) {
            Mat x2 = a.multiply(x, x);
            Mat x3 = a.multiply(x2, x);
            x = x2.scaled(f.from_long(3)) - x3.scaled(f.from_long(2));
            require(++iter <= a.dim() + 2, ErrorKind::Internal,
                    "idempotent lifting did not converge");
        }
        prims.push_back(x);
        fsum = fsum + x;
    }
    prims.push_back(one - fsum);

    for (size_t i = 0; i < prims.size(); ++i) {
        require(a.multiply(prims[i], prims[i]) == prims[i] && !prims[i].is_zero(),
                ErrorKind::Internal, "lifted element is not a nonzero idempotent");
        for (size_t j = 0; j < prims.size(); ++j)
            if (i != j)
                require(a.multiply(prims[i], prims[j]).is_zero(), ErrorKind::Internal,
                        "lifted idempotents are not orthogonal");
    }
    return prims;
}

WedderburnData wedderburn_blocks(const Algebra& a) {
    Subspace rad = jacobson_radical(a);
    WedderburnData wd;
    wd.is_semisimple = rad.is_zero();
    const Algebra* top = &a;
    Algebra quotient_storage;
    if (!rad.is_zero()) {
        quotient_storage = quotient_algebra(a, rad).quotient;
        top = &quotient_storage;
    }
    std::vector<Mat> cents = central_primitive_idempotents(*top);
    wd.block_count = int(cents.size());
    for (const Mat& c : cents) wd.block_dims.push_back(corner_subspace(*top, c).dim());
    std::sort(wd.block_dims.rbegin(), wd.block_dims.rend());
    return wd;
}

bool is_simple(const Algebra& a) {
    WedderburnData wd = wedderburn_blocks(a);
    return wd.is_semisimple && wd.block_count == 1;
}

Algebra path_algebra(const Quiver& q, FieldSpec field) {
    require(q.is_acyclic(), ErrorKind::CyclicQuiver, "path algebra needs an acyclic quiver");
    std::vector<Path> paths = enumerate_paths(q);
    const int n = int(paths.size());
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int i = 0; i < n; ++i) index[{paths[i].start, paths[i].arrows}] = i;

    Algebra a;
    a.field = field;
    for (const Path& p : paths) a.labels.push_back(path_label(q, p));
    a.mult.assign(size_t(n) * n, {});
    a.unit.assign(n, field.zero());
    for (int i = 0; i < n; ++i) {
        if (paths[i].trivial()) a.unit[i] = field.one();
        for (int j = 0; j < n; ++j) {
            if (paths[i].end != paths[j].start) continue;
            std::vector<int> cat = paths[i].arrows;
            cat.insert(cat.end(), paths[j].arrows.begin(), paths[j].arrows.end());
            auto it = index.find({paths[i].start, cat});
            require(it != index.end(), ErrorKind::Internal, "path concatenation left the basis");
            a.mult[size_t(i) * n + j].push_back({it->second, field.one()});
        }
    }
    return a;
}

Algebra triangular_example_algebra(FieldSpec field) {
    // basis order: e1, e2, r, m, rm
    Algebra a;
    a.field = field;
    a.labels = {"e1", "e2", "r", "m", "rm"};
    const int n = 5;
    a.mult.assign(size_t(n) * n, {});
    a.unit = {field.one(), field.one(), field.zero(), field.zero(), field.zero()};
    auto set = [&](int x, int y, int z) { a.mult[size_t(x) * n + y].push_back({z, field.one()}); };
    enum { E1, E2, R, M, RM };
    set(E1, E1, E1);
    set(E2, E2, E2);
    set(E2, R, R);
    set(R, E2, R);
    set(E2, M, M);
    set(M, E1, M);
    set(E2, RM, RM);
    set(RM, E1, RM);
    set(R, M, RM);
    return a;
}

Algebra opposite_algebra(const Algebra& a) {
    Algebra op = a;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op.mult[size_t(i) * n + j] = a.mult[size_t(j) * n + i];
    return op;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
    require(is_two_sided_ideal(a, ideal), ErrorKind::InvalidArgument,
            "quotient by a subspace that is not a two-sided ideal");
    const int n = a.dim();
    const FieldSpec f = a.field;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < ideal.dim(); ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(ideal.basis.at(i, j)) != 0) {
                is_pivot[j] = true;
                break;
            }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const int q = int(free_cols.size());

    QuotientAlgebra out;
    out.projection = Mat(f, q, n);
    out.section = Mat(f, n, q);
    for (int k = 0; k < q; ++k) out.section.at(free_cols[k], k) = 1;
    for (int j = 0; j < n; ++j) {
        // reduce e_j modulo the ideal, read off the free coordinates
        Mat v = Mat::unit_col(f, n, j);
        for (int i = 0; i < ideal.dim(); ++i) {
            int pc = -1;
            for (int c = 0; c < n && pc < 0; ++c)
                if (sgn(ideal.basis.at(i, c)) != 0) pc = c;
            const Scalar coef = v.at(pc, 0);
            if (sgn(coef) == 0) continue;
            for (int c = pc; c < n; ++c)
                v.at(c, 0) = f.sub(v.at(c, 0), f.mul(coef, ideal.basis.at(i, c)));
        }
        for (int k = 0; k < q; ++k) out.projection.at(k, j) = v.at(free_cols[k], 0);
    }

    Algebra& qa = out.quotient;
    qa.field = f;
    for (int k = 0; k < q; ++k) qa.labels.push_back(a.labels[free_cols[k]] + "~");
    qa.mult.assign(size_t(q) * q, {});
    Mat u = out.projection * a.unit_vec();
    qa.unit = u.col_as_vec(0);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            Mat prod = out.projection *
                       a.multiply(Mat::unit_col(f, n, free_cols[i]), Mat::unit_col(f, n, free_cols[j]));
            for (int k = 0; k < q; ++k)
                if (sgn(prod.at(k, 0)) != 0) qa.mult[size_t(i) * q + j].push_back({k, prod.at(k, 0)});
        }
    return out;
}

} // namespace comax
