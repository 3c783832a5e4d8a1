#include "comax/module.hpp"

#include <algorithm>
#include <numeric>

namespace comax {

namespace {

void check_compatible(const FDModule& x, const FDModule& y) {
    require(x.side == y.side, ErrorKind::SideMismatch, "modules on different sides");
    require(x.algebra == y.algebra || *x.algebra == *y.algebra, ErrorKind::AlgebraMismatch,
            "modules over different algebras");
}

} // namespace

Mat FDModule::act(const Mat& alg_coords) const {
    Mat out(field(), dim, dim);
    for (int i = 0; i < algebra->dim(); ++i) {
        if (sgn(alg_coords.at(i, 0)) == 0) continue;
        out = out + action[i].scaled(alg_coords.at(i, 0));
    }
    return out;
}

FDModule regular_module(std::shared_ptr<const Algebra> a, Side side) {
    FDModule m;
    m.algebra = a;
    m.side = side;
    m.dim = a->dim();
    for (int i = 0; i < a->dim(); ++i)
        m.action.push_back(side == Side::Left ? a->left_mult_basis(i) : a->right_mult_basis(i));
    return m;
}

ValidationReport validate_module(const FDModule& m) {
    const Algebra& a = *m.algebra;
    if (int(m.action.size()) != a.dim()) return {false, "one action matrix per basis element required"};
    for (const Mat& mat : m.action)
        if (mat.rows != m.dim || mat.cols != m.dim) return {false, "action matrix shape mismatch"};
    if (!(m.act(a.unit_vec()) == Mat::identity(m.field(), m.dim)))
        return {false, "unit does not act as identity"};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            Mat prod(m.field(), m.dim, m.dim);
            Mat ij = a.multiply(a.basis_vec(i), a.basis_vec(j));
            prod = m.act(ij);
            Mat expect = m.side == Side::Left ? m.action[i] * m.action[j]
                                              : m.action[j] * m.action[i];
            if (!(prod == expect))
                return {false, "action incompatible with multiplication at (" + a.labels[i] +
                                   ", " + a.labels[j] + ")"};
        }
    return {};
}

bool is_module_map(const FDModule& x, const FDModule& y, const Mat& f) {
    check_compatible(x, y);
    if (f.rows != y.dim || f.cols != x.dim) return false;
    for (int i = 0; i < x.algebra->dim(); ++i)
        if (!(y.action[i] * f == f * x.action[i])) return false;
    return true;
}

bool is_submodule(const FDModule& m, const Subspace& s) {
    require(s.ambient_dim == m.dim, ErrorKind::AmbientMismatch, "submodule ambient mismatch");
    for (int i = 0; i < m.algebra->dim(); ++i)
        for (int k = 0; k < s.dim(); ++k)
            if (!s.contains_vector(m.action[i] * s.basis_col(k))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// hom spaces
// ---------------------------------------------------------------------------

namespace {

bool is_diagonal(const Mat& m) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (i != j && sgn(m.at(i, j)) != 0) return false;
    return true;
}

size_t nnz(const Mat& m) {
    size_t c = 0;
    for (const auto& x : m.e)
        if (sgn(x) != 0) ++c;
    return c;
}

} // namespace

std::vector<Mat> hom_space(const FDModule& x, const FDModule& y) {
    check_compatible(x, y);
    const FieldSpec f = x.field();
    const int nx = x.dim, ny = y.dim;
    if (nx == 0 || ny == 0) return {};

    // Split the constraints: simultaneous diagonal actions cut the unknowns
    // combinatorially, the rest go through incremental kernel intersection.
    std::vector<int> diag_idx, gen_idx;
    for (int i = 0; i < x.algebra->dim(); ++i) {
        if (is_diagonal(x.action[i]) && is_diagonal(y.action[i]))
            diag_idx.push_back(i);
        else
            gen_idx.push_back(i);
    }
    std::sort(gen_idx.begin(), gen_idx.end(), [&](int a, int b) {
        size_t na = nnz(x.action[a]) + nnz(y.action[a]);
        size_t nb = nnz(x.action[b]) + nnz(y.action[b]);
        return na != nb ? na < nb : a < b;
    });

    std::vector<Mat> basis;
    for (int r = 0; r < ny; ++r)
        for (int c = 0; c < nx; ++c) {
            bool ok = true;
            for (int i : diag_idx)
                if (y.action[i].at(r, r) != x.action[i].at(c, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Mat g(f, ny, nx);
            g.at(r, c) = 1;
            basis.push_back(std::move(g));
        }

    for (int i : gen_idx) {
        if (basis.empty()) break;
        const int k = int(basis.size());
        Mat sys(f, ny * nx, k);
        for (int c = 0; c < k; ++c) {
            Mat d = y.action[i] * basis[c] - basis[c] * x.action[i];
            for (int r = 0; r < ny; ++r)
                for (int s = 0; s < nx; ++s) sys.at(r * nx + s, c) = d.at(r, s);
        }
        Subspace ker = kernel_basis(sys);
        std::vector<Mat> next;
        for (int v = 0; v < ker.dim(); ++v) {
            Mat combo(f, ny, nx);
            for (int c = 0; c < k; ++c) {
                const Scalar& coef = ker.basis.at(v, c);
                if (sgn(coef) == 0) continue;
                combo = combo + basis[c].scaled(coef);
            }
            next.push_back(std::move(combo));
        }
        basis = std::move(next);
    }
    if (basis.empty()) return {};

    // canonical RREF basis in vectorised coordinates
    Mat stacked(f, int(basis.size()), ny * nx);
    for (size_t b = 0; b < basis.size(); ++b)
        for (int r = 0; r < ny; ++r)
            for (int c = 0; c < nx; ++c) stacked.at(int(b), r * nx + c) = basis[b].at(r, c);
    Subspace canon = Subspace::from_span(stacked);
    std::vector<Mat> out;
    for (int b = 0; b < canon.dim(); ++b) {
        Mat g(f, ny, nx);
        for (int r = 0; r < ny; ++r)
            for (int c = 0; c < nx; ++c) g.at(r, c) = canon.basis.at(b, r * nx + c);
        out.push_back(std::move(g));
    }
    return out;
}

int hom_dim(const FDModule& x, const FDModule& y) { return int(hom_space(x, y).size()); }

// ---------------------------------------------------------------------------
// radical / socle / singularity
// ---------------------------------------------------------------------------

RadSoc radical_socle(const FDModule& m) {
    Subspace j = jacobson_radical(*m.algebra);
    RadSoc out{Subspace::zero(m.field(), m.dim), Subspace::full(m.field(), m.dim)};
    if (j.is_zero()) return out;
    Mat rad_span(m.field(), 0, m.dim);
    Mat soc_sys(m.field(), 0, m.dim);
    for (int k = 0; k < j.dim(); ++k) {
        Mat op = m.act(j.basis_col(k));
        rad_span = rad_span.rows == 0 ? op.transpose() : vstack(rad_span, op.transpose());
        soc_sys = soc_sys.rows == 0 ? op : vstack(soc_sys, op);
    }
    out.radical = Subspace::from_span(rad_span);
    out.socle = kernel_basis(soc_sys);
    return out;
}

bool is_small(const FDModule& m, const Subspace& n) {
    require(is_submodule(m, n), ErrorKind::InvalidArgument, "is_small needs a submodule");
    return is_contained(n, radical_socle(m).radical);
}

bool is_essential(const FDModule& m, const Subspace& n) {
    require(is_submodule(m, n), ErrorKind::InvalidArgument, "is_essential needs a submodule");
    return is_contained(radical_socle(m).socle, n);
}

Subspace singular_submodule(const FDModule& m) {
    FDModule reg = regular_module(m.algebra, m.side);
    Subspace soc = radical_socle(reg).socle;
    if (soc.is_zero()) return Subspace::full(m.field(), m.dim); // J = A impossible; soc=0 only if A=0
    Mat sys(m.field(), 0, m.dim);
    for (int k = 0; k < soc.dim(); ++k) {
        Mat op = m.act(soc.basis_col(k));
        sys = sys.rows == 0 ? op : vstack(sys, op);
    }
    return kernel_basis(sys);
}

FDModule k_dual(const FDModule& m) {
    FDModule d;
    d.algebra = m.algebra;
    d.side = m.side == Side::Left ? Side::Right : Side::Left;
    d.dim = m.dim;
    for (const Mat& a : m.action) d.action.push_back(a.transpose());
    return d;
}

// ---------------------------------------------------------------------------
// submodules / quotients / sums
// ---------------------------------------------------------------------------

SubmoduleModule submodule_module(const FDModule& m, const Subspace& u) {
    require(is_submodule(m, u), ErrorKind::InvalidArgument, "subspace is not a submodule");
    SubmoduleModule out;
    out.mod.algebra = m.algebra;
    out.mod.side = m.side;
    out.mod.dim = u.dim();
    out.inclusion = u.basis.transpose();
    for (const Mat& a : m.action) {
        Mat restricted(m.field(), u.dim(), u.dim());
        for (int j = 0; j < u.dim(); ++j) {
            Mat coords = u.coords_of(a * u.basis_col(j));
            for (int i = 0; i < u.dim(); ++i) restricted.at(i, j) = coords.at(i, 0);
        }
        out.mod.action.push_back(std::move(restricted));
    }
    return out;
}

QuotientModule quotient_module(const FDModule& m, const Subspace& u) {
    require(is_submodule(m, u), ErrorKind::InvalidArgument, "subspace is not a submodule");
    const FieldSpec f = m.field();
    const int n = m.dim;
    std::vector<int> pivot_col(u.dim(), -1);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(u.basis.at(i, j)) != 0) {
                pivot_col[i] = j;
                is_pivot[j] = true;
                break;
            }
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const int q = int(free_cols.size());

    QuotientModule out;
    out.projection = Mat(f, q, n);
    out.section = Mat(f, n, q);
    for (int k = 0; k < q; ++k) out.section.at(free_cols[k], k) = 1;
    for (int j = 0; j < n; ++j) {
        Mat v = Mat::unit_col(f, n, j);
        for (int i = 0; i < u.dim(); ++i) {
            const Scalar coef = v.at(pivot_col[i], 0);
            if (sgn(coef) == 0) continue;
            for (int c = pivot_col[i]; c < n; ++c)
                v.at(c, 0) = f.sub(v.at(c, 0), f.mul(coef, u.basis.at(i, c)));
        }
        for (int k = 0; k < q; ++k) out.projection.at(k, j) = v.at(free_cols[k], 0);
    }
    out.mod.algebra = m.algebra;
    out.mod.side = m.side;
    out.mod.dim = q;
    for (const Mat& a : m.action) out.mod.action.push_back(out.projection * a * out.section);
    return out;
}

DirectSumModule direct_sum_module(const std::vector<FDModule>& parts,
                                  std::shared_ptr<const Algebra> algebra, Side side) {
    DirectSumModule out;
    out.mod.algebra = algebra;
    out.mod.side = side;
    int total = 0;
    for (const FDModule& p : parts) {
        out.offsets.push_back(total);
        total += p.dim;
    }
    out.mod.dim = total;
    const FieldSpec f = algebra->field;
    for (int i = 0; i < algebra->dim(); ++i) {
        Mat blk(f, total, total);
        for (size_t s = 0; s < parts.size(); ++s) {
            int off = out.offsets[s];
            const Mat& a = parts[s].action[i];
            for (int r = 0; r < a.rows; ++r)
                for (int c = 0; c < a.cols; ++c) blk.at(off + r, off + c) = a.at(r, c);
        }
        out.mod.action.push_back(std::move(blk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// projective covers and injective hulls
// ---------------------------------------------------------------------------

ProjectiveCover projective_cover(const FDModule& m) {
    const FieldSpec f = m.field();
    const Algebra& a = *m.algebra;
    ProjectiveCover out;
    if (m.dim == 0) {
        out.p = m;
        out.onto = Mat(f, 0, 0);
        return out;
    }

    std::vector<Mat> idems = primitive_idempotents(a);
    FDModule reg = regular_module(m.algebra, m.side);

    RadSoc rs = radical_socle(m);
    QuotientModule top = quotient_module(m, rs.radical);

    // one indecomposable projective per isomorphism class: idempotents in the
    // same matrix block give isomorphic A e, so keep one representative each
    std::vector<Mat> reps;
    std::vector<FDModule> rep_tops;
    for (const Mat& e : idems) {
        Mat gen_mat = m.side == Side::Left ? a.right_mult(e) : a.left_mult(e);
        SubmoduleModule pe = submodule_module(reg, Subspace::from_span(gen_mat.transpose()));
        QuotientModule pe_top = quotient_module(pe.mod, radical_socle(pe.mod).radical);
        bool known = false;
        for (const FDModule& t : rep_tops)
            if (hom_dim(t, pe_top.mod) > 0) {
                known = true;
                break;
            }
        if (!known) {
            reps.push_back(e);
            rep_tops.push_back(pe_top.mod);
        }
    }

    std::vector<FDModule> summands;
    std::vector<Mat> maps; // m.dim x (summand dim), one per copy
    for (const Mat& e : reps) {
        // indecomposable projective: A e (left) / e A (right)
        Mat gen_mat = m.side == Side::Left ? a.right_mult(e) : a.left_mult(e);
        Subspace proj_space = Subspace::from_span(gen_mat.transpose());
        SubmoduleModule pe = submodule_module(reg, proj_space);

        // multiplicity of the corresponding simple in the top = rank of e on top
        Mat e_on_top = top.mod.act(e);
        Subspace image = Subspace::from_span(e_on_top.transpose());
        for (int copy = 0; copy < image.dim(); ++copy) {
            Mat t = image.basis_col(copy);
            Mat v = m.act(e) * (top.section * t); // e * (lift of t)
            // map A e -> M, x e |-> x (e v); columns over the submodule basis
            Mat phi(f, m.dim, pe.mod.dim);
            for (int j = 0; j < pe.mod.dim; ++j) {
                Mat gen = pe.inclusion.col(j); // element of A
                Mat col = m.act(gen) * v;
                for (int r = 0; r < m.dim; ++r) phi.at(r, j) = col.at(r, 0);
            }
            summands.push_back(pe.mod);
            maps.push_back(std::move(phi));
        }
    }

    DirectSumModule ds = direct_sum_module(summands, m.algebra, m.side);
    Mat onto(f, m.dim, ds.mod.dim);
    for (size_t s = 0; s < summands.size(); ++s)
        for (int j = 0; j < summands[s].dim; ++j)
            for (int r = 0; r < m.dim; ++r) onto.at(r, ds.offsets[s] + j) = maps[s].at(r, j);

    require(is_module_map(ds.mod, m, onto), ErrorKind::Internal, "cover map is not a module map");
    require(rank(onto) == m.dim, ErrorKind::Internal, "cover map is not surjective");
    require(is_small(ds.mod, kernel_basis(onto)), ErrorKind::Internal,
            "cover kernel is not small");

    if (ds.mod.dim == m.dim) {
        // m itself is projective; the identity is already a cover
        out.p = m;
        out.onto = Mat::identity(f, m.dim);
        out.summands = {m};
        return out;
    }
    out.p = ds.mod;
    out.onto = std::move(onto);
    out.summands = std::move(summands);
    return out;
}

InjectiveHull injective_hull(const FDModule& m) {
    const FieldSpec f = m.field();
    InjectiveHull out;
    if (m.dim == 0) {
        out.e = m;
        out.embedding = Mat(f, 0, 0);
        return out;
    }
    ProjectiveCover pc = projective_cover(k_dual(m));
    if (pc.p.dim == m.dim) {
        out.e = m;
        out.embedding = Mat::identity(f, m.dim);
        out.summands = {m};
        return out;
    }
    out.e = k_dual(pc.p);
    out.embedding = pc.onto.transpose();
    for (const FDModule& s : pc.summands) out.summands.push_back(k_dual(s));
    require(is_module_map(m, out.e, out.embedding), ErrorKind::Internal,
            "hull embedding is not a module map");
    require(rank(out.embedding) == m.dim, ErrorKind::Internal, "hull embedding not injective");
    require(is_essential(out.e, Subspace::from_span(out.embedding.transpose())),
            ErrorKind::Internal, "hull embedding not essential");
    return out;
}

// ---------------------------------------------------------------------------
// trace, reject, cosingular ideal
// ---------------------------------------------------------------------------

TraceReject trace_and_reject(const FDModule& x, const FDModule& target) {
    const FieldSpec f = x.field();
    TraceReject out;
    std::vector<Mat> homs = hom_space(x, target);
    Mat span(f, 0, target.dim);
    for (const Mat& h : homs) span = span.rows == 0 ? h.transpose() : vstack(span, h.transpose());
    out.trace_of_x_in_target =
        span.rows == 0 ? Subspace::zero(f, target.dim) : Subspace::from_span(span);

    std::vector<Mat> back = hom_space(target, x);
    Mat sys(f, 0, target.dim);
    for (const Mat& h : back) sys = sys.rows == 0 ? h : vstack(sys, h);
    out.reject_of_target_into_x =
        sys.rows == 0 ? Subspace::full(f, target.dim) : kernel_basis(sys);
    return out;
}

std::vector<Mat> nabla(const FDModule& x, const FDModule& y) {
    const FieldSpec f = x.field();
    std::vector<Mat> homs = hom_space(x, y);
    if (homs.empty()) return {};
    Subspace rad = radical_socle(y).radical;
    QuotientModule q = quotient_module(y, rad);
    // Im(sum c_k F_k) <= Rad(Y)  <=>  proj o (sum c_k F_k) = 0, linear in c.
    const int k = int(homs.size());
    Mat sys(f, q.mod.dim * x.dim, k);
    for (int c = 0; c < k; ++c) {
        Mat d = q.projection * homs[c];
        for (int r = 0; r < d.rows; ++r)
            for (int s = 0; s < d.cols; ++s) sys.at(r * x.dim + s, c) = d.at(r, s);
    }
    Subspace ker = kernel_basis(sys);
    std::vector<Mat> out;
    for (int v = 0; v < ker.dim(); ++v) {
        Mat combo(f, y.dim, x.dim);
        for (int c = 0; c < k; ++c) {
            const Scalar& coef = ker.basis.at(v, c);
            if (sgn(coef) == 0) continue;
            combo = combo + homs[c].scaled(coef);
        }
        out.push_back(std::move(combo));
    }
    return out;
}

// ---------------------------------------------------------------------------
// endomorphism algebras and copolyformness
// ---------------------------------------------------------------------------

Mat EndAlgebra::coords_of(const FDModule& m, const Mat& endo) const {
    // RREF basis: coordinates are the entries at the pivot positions
    const FieldSpec f = m.field();
    const int n = m.dim;
    Mat stacked(f, int(basis.size()), n * n);
    for (size_t b = 0; b < basis.size(); ++b)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked.at(int(b), r * n + c) = basis[b].at(r, c);
    Subspace sp;
    sp.ambient_dim = n * n;
    sp.basis = stacked;
    Mat vec(f, n * n, 1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) vec.at(r * n + c, 0) = endo.at(r, c);
    return sp.coords_of(vec);
}

EndAlgebra endomorphism_algebra(const FDModule& m) {
    EndAlgebra out;
    out.basis = hom_space(m, m);
    const int k = int(out.basis.size());
    require(k > 0, ErrorKind::Internal, "endomorphism algebra of the zero module");
    out.alg.field = m.field();
    for (int i = 0; i < k; ++i) out.alg.labels.push_back("f" + std::to_string(i));
    out.alg.mult.assign(size_t(k) * k, {});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Mat comp = out.basis[i] * out.basis[j]; // (f*g)(v) = f(g(v))
            Mat coords = out.coords_of(m, comp);
            for (int c = 0; c < k; ++c)
                if (sgn(coords.at(c, 0)) != 0)
                    out.alg.mult[size_t(i) * k + j].push_back({c, coords.at(c, 0)});
        }
    Mat unit_coords = out.coords_of(m, Mat::identity(m.field(), m.dim));
    out.alg.unit = unit_coords.col_as_vec(0);
    return out;
}

bool is_copolyform(const FDModule& m) {
    ProjectiveCover pc = projective_cover(m);
    if (pc.p.dim == 0) return true;
    EndAlgebra end = endomorphism_algebra(pc.p);
    return jacobson_radical(end.alg).is_zero();
}

bool is_hollow(const FDModule& m) {
    if (m.dim == 0) return false;
    Subspace rad = radical_socle(m).radical;
    QuotientModule top = quotient_module(m, rad);
    if (top.mod.dim == 0) return false;
    // semisimple + split: the top is simple iff its endomorphism ring is k
    return hom_dim(top.mod, top.mod) == 1;
}

bool is_epiform(const FDModule& m) { return is_hollow(m) && is_copolyform(m); }

bool is_codense_cover(const FDModule& src, const FDModule& tgt, const Mat& pi) {
    require(is_module_map(src, tgt, pi), ErrorKind::InvalidArgument,
            "pi is not a module map");
    require(rank(pi) == tgt.dim, ErrorKind::NotSurjective, "pi is not surjective");
    Subspace ker = kernel_basis(pi);
    if (ker.is_zero()) return true;
    SubmoduleModule km = submodule_module(src, ker);
    ProjectiveCover pc = projective_cover(src);
    return hom_dim(pc.p, km.mod) == 0;
}

MaxCodenseCover maximal_codense_cover(const FDModule& m) {
    ProjectiveCover pc = projective_cover(m);
    Subspace ker = kernel_basis(pc.onto);
    if (ker.is_zero()) return {pc.p, pc.onto};
    SubmoduleModule km = submodule_module(pc.p, ker);
    Subspace tr_in_k = trace_and_reject(pc.p, km.mod).trace_of_x_in_target;
    // embed the trace back into P
    Mat rows(m.field(), 0, pc.p.dim);
    for (int i = 0; i < tr_in_k.dim(); ++i) {
        Mat v = km.inclusion * tr_in_k.basis_col(i);
        rows = rows.rows == 0 ? v.transpose() : vstack(rows, v.transpose());
    }
    Subspace t = rows.rows == 0 ? Subspace::zero(m.field(), pc.p.dim) : Subspace::from_span(rows);
    QuotientModule qt = quotient_module(pc.p, t);
    Mat induced = pc.onto * qt.section;
    require(induced * qt.projection == pc.onto, ErrorKind::Internal,
            "induced cover map does not factor the projective cover");
    require(is_codense_cover(qt.mod, m, induced), ErrorKind::Internal,
            "maximal codense cover is not codense");
    return {qt.mod, induced};
}

// ---------------------------------------------------------------------------
// finite-field oracle machinery
// ---------------------------------------------------------------------------

std::vector<Subspace> brute_force_submodules(const FDModule& m) {
    require(!m.field().is_rational(), ErrorKind::InvalidArgument,
            "submodule enumeration needs a finite field");
    return enumerate_invariant_subspaces(m.field(), m.dim, m.action, 1 << 16);
}

Subspace small_reject(const FDModule& m) {
    Subspace out = Subspace::full(m.field(), m.dim);
    for (const Subspace& u : brute_force_submodules(m)) {
        QuotientModule q = quotient_module(m, u);
        bool small_class;
        if (q.mod.dim == 0) {
            small_class = true;
        } else {
            InjectiveHull ih = injective_hull(q.mod);
            small_class = is_small(ih.e, Subspace::from_span(ih.embedding.transpose()));
        }
        if (small_class) out = intersect(out, u);
    }
    return out;
}

// ---------------------------------------------------------------------------
// comodule bridge and simples
// ---------------------------------------------------------------------------

FDModule comodule_as_module(const Coalgebra& c, std::shared_ptr<const Algebra> dual, Side side) {
    require(int(dual->dim()) == c.dim(), ErrorKind::AlgebraMismatch,
            "dual algebra dimension mismatch");
    FDModule m;
    m.algebra = dual;
    m.side = side;
    m.dim = c.dim();
    const FieldSpec f = c.field;
    for (int i = 0; i < c.dim(); ++i) {
        Mat op(f, c.dim(), c.dim());
        for (int col = 0; col < c.dim(); ++col)
            for (const DeltaTerm& t : c.delta[col]) {
                if (side == Side::Left) {
                    // f_i . c = sum c1 f_i(c2)
                    if (t.right == i) op.at(t.left, col) = f.add(op.at(t.left, col), t.coeff);
                } else {
                    // c . f_i = sum f_i(c1) c2
                    if (t.left == i) op.at(t.right, col) = f.add(op.at(t.right, col), t.coeff);
                }
            }
        m.action.push_back(std::move(op));
    }
    return m;
}

std::vector<FDModule> distinct_simple_modules(std::shared_ptr<const Algebra> a, Side side) {
    std::vector<Mat> idems = primitive_idempotents(*a);
    FDModule reg = regular_module(a, side);
    std::vector<FDModule> simples;
    for (const Mat& e : idems) {
        Mat gen_mat = side == Side::Left ? a->right_mult(e) : a->left_mult(e);
        SubmoduleModule pe = submodule_module(reg, Subspace::from_span(gen_mat.transpose()));
        Subspace rad = radical_socle(pe.mod).radical;
        QuotientModule top = quotient_module(pe.mod, rad);
        bool known = false;
        for (const FDModule& s : simples)
            if (hom_dim(s, top.mod) > 0) {
                known = true;
                break;
            }
        if (!known) simples.push_back(top.mod);
    }
    return simples;
}

} // namespace comax
