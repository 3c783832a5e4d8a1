#include "comax/quotient.hpp"

namespace comax {

namespace {

// End(E) assembled blockwise from a direct-sum decomposition: every map is a
// block matrix of maps between the summands. Falls back to the generic
// solver when no decomposition is available.
std::vector<Mat> end_basis_of_hull(const FDModule& e, const std::vector<FDModule>& summands) {
    if (summands.size() <= 1) return hom_space(e, e);
    std::vector<int> offsets;
    int total = 0;
    for (const FDModule& s : summands) {
        offsets.push_back(total);
        total += s.dim;
    }
    require(total == e.dim, ErrorKind::Internal, "hull summands do not fill the hull");
    const FieldSpec f = e.field();
    std::vector<Mat> basis;
    for (size_t s = 0; s < summands.size(); ++s)
        for (size_t t = 0; t < summands.size(); ++t)
            for (const Mat& g : hom_space(summands[s], summands[t])) {
                Mat blk(f, e.dim, e.dim);
                for (int r = 0; r < g.rows; ++r)
                    for (int c = 0; c < g.cols; ++c) blk.at(offsets[t] + r, offsets[s] + c) = g.at(r, c);
                basis.push_back(std::move(blk));
            }
    return basis;
}

} // namespace

QmaxResult qmax(const Algebra& a, Side side) {
    const FieldSpec f = a.field;
    auto ap = std::make_shared<const Algebra>(a);
    FDModule reg = regular_module(ap, side);
    InjectiveHull ih = injective_hull(reg);
    const FDModule& e = ih.e;
    const int ne = e.dim, na = a.dim();

    std::vector<Mat> hb = end_basis_of_hull(e, ih.summands);
    const int nh = int(hb.size());
    require(nh > 0, ErrorKind::Internal, "empty endomorphism ring of the hull");

    // evaluation at the embedded unit: E = H * iota(1)
    Mat iota1 = ih.embedding * a.unit_vec();
    Mat ev1(f, ne, nh);
    for (int k = 0; k < nh; ++k) {
        Mat v = hb[k] * iota1;
        for (int r = 0; r < ne; ++r) ev1.at(r, k) = v.at(r, 0);
    }
    require(rank(ev1) == ne, ErrorKind::BicommutantMismatch,
            "hull is not generated by the embedded unit under End(E)");
    auto w = solve(ev1, Mat::identity(f, ne));
    require(w.has_value(), ErrorKind::BicommutantMismatch, "no preimage section for evaluation");

    // H0 = endomorphisms vanishing on the embedded copy of a
    Mat h0sys(f, ne * na, nh);
    for (int k = 0; k < nh; ++k) {
        Mat hi = hb[k] * ih.embedding;
        for (int r = 0; r < ne; ++r)
            for (int c = 0; c < na; ++c) h0sys.at(r * na + c, k) = hi.at(r, c);
    }
    Subspace h0 = kernel_basis(h0sys);

    // Q = common kernel of H0 inside E
    Subspace q_space = Subspace::full(f, ne);
    for (int v = 0; v < h0.dim(); ++v) {
        Mat h(f, ne, ne);
        for (int k = 0; k < nh; ++k) {
            const Scalar& cf = h0.basis.at(v, k);
            if (sgn(cf) == 0) continue;
            h = h + hb[k].scaled(cf);
        }
        q_space = intersect(q_space, kernel_basis(h));
    }
    const int nq = q_space.dim();
    for (int j = 0; j < na; ++j)
        require(q_space.contains_vector(ih.embedding.col(j)), ErrorKind::BicommutantMismatch,
                "embedded algebra not inside the reject subspace");

    // F_q per Q basis vector, with the consistency checks
    std::vector<Mat> fq;
    for (int qi = 0; qi < nq; ++qi) {
        Mat q = q_space.basis_col(qi);
        std::vector<Mat> hq;
        hq.reserve(nh);
        for (int k = 0; k < nh; ++k) hq.push_back(hb[k] * q);
        Mat fm(f, ne, ne);
        for (int j = 0; j < ne; ++j)
            for (int k = 0; k < nh; ++k) {
                const Scalar& cf = w->at(k, j);
                if (sgn(cf) == 0) continue;
                for (int r = 0; r < ne; ++r)
                    fm.at(r, j) = f.add(fm.at(r, j), f.mul(cf, hq[k].at(r, 0)));
            }
        require(fm * iota1 == q, ErrorKind::BicommutantMismatch,
                "transported endomorphism does not evaluate back to q");
        for (int k = 0; k < nh; ++k)
            require(fm * hb[k] == hb[k] * fm, ErrorKind::BicommutantMismatch,
                    "transported endomorphism does not centralise End(E)");
        fq.push_back(std::move(fm));
    }
    {
        // dim of the bicommutant span must equal dim Q
        Mat stacked(f, nq, ne * ne);
        for (int qi = 0; qi < nq; ++qi)
            for (int r = 0; r < ne; ++r)
                for (int c = 0; c < ne; ++c) stacked.at(qi, r * ne + c) = fq[qi].at(r, c);
        require(Subspace::from_span(stacked).dim() == nq, ErrorKind::BicommutantMismatch,
                "bicommutant dimension differs from the reject subspace");
    }

    // ring structure on Q: left side composes forward, right side opposite,
    // so that the embedding is multiplicative in the algebra's own order.
    QmaxResult out;
    out.q.field = f;
    for (int i = 0; i < nq; ++i) out.q.labels.push_back("q" + std::to_string(i));
    out.q.mult.assign(size_t(nq) * nq, {});
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) {
            Mat prod = side == Side::Left ? fq[i] * q_space.basis_col(j)
                                          : fq[j] * q_space.basis_col(i);
            require(q_space.contains_vector(prod), ErrorKind::BicommutantMismatch,
                    "product leaves the reject subspace");
            Mat coords = q_space.coords_of(prod);
            for (int k = 0; k < nq; ++k)
                if (sgn(coords.at(k, 0)) != 0)
                    out.q.mult[size_t(i) * nq + j].push_back({k, coords.at(k, 0)});
        }
    out.q.unit = q_space.coords_of(iota1).col_as_vec(0);

    out.embedding = Mat(f, nq, na);
    for (int j = 0; j < na; ++j) {
        Mat coords = q_space.coords_of(ih.embedding.col(j));
        for (int i = 0; i < nq; ++i) out.embedding.at(i, j) = coords.at(i, 0);
    }
    require(rank(out.embedding) == na, ErrorKind::BicommutantMismatch,
            "quotient-ring embedding is not injective");
    require(out.embedding * a.unit_vec() == out.q.unit_vec(), ErrorKind::BicommutantMismatch,
            "quotient-ring embedding is not unital");
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            Mat lhs = out.embedding * a.multiply(a.basis_vec(i), a.basis_vec(j));
            Mat rhs = out.q.multiply(out.embedding.col(i), out.embedding.col(j));
            require(lhs == rhs, ErrorKind::BicommutantMismatch,
                    "quotient-ring embedding is not multiplicative");
        }

    out.hull = e;
    out.hull_embedding = ih.embedding;
    out.q_subspace = q_space;
    return out;
}

Algebra qmax_socle_fastpath(const Algebra& a) {
    auto ap = std::make_shared<const Algebra>(a);
    FDModule reg = regular_module(ap, Side::Right);
    require(singular_submodule(reg).is_zero(), ErrorKind::NotNonSingular,
            "socle fastpath needs a right non-singular algebra");
    Subspace soc = radical_socle(reg).socle;
    SubmoduleModule sm = submodule_module(reg, soc);
    return endomorphism_algebra(sm.mod).alg;
}

bool same_structure(const Coalgebra& a, const Coalgebra& b) {
    Coalgebra x = a, y = b;
    x.labels.assign(a.dim(), "");
    y.labels.assign(b.dim(), "");
    return x == y;
}

CoalgebraCover covering_coalgebra(const Coalgebra& c) {
    const FieldSpec f = c.field;
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    QmaxResult qr = qmax(*a, Side::Right);

    CoalgebraCover out;
    out.d = dual_coalgebra_of_algebra(qr.q);
    out.pi = qr.embedding.transpose(); // c.dim x d.dim
    if (out.pi.is_identity()) out.d.labels = c.labels;

    // coalgebra morphism identities, exactly
    const int nd = out.d.dim(), nc = c.dim();
    for (int d = 0; d < nd; ++d) {
        Mat lhs(f, nc * nc, 1);
        for (const DeltaTerm& t : out.d.delta[d])
            for (int i = 0; i < nc; ++i) {
                if (sgn(out.pi.at(i, t.left)) == 0) continue;
                for (int j = 0; j < nc; ++j) {
                    if (sgn(out.pi.at(j, t.right)) == 0) continue;
                    int idx = i * nc + j;
                    lhs.at(idx, 0) = f.add(
                        lhs.at(idx, 0),
                        f.mul(t.coeff, f.mul(out.pi.at(i, t.left), out.pi.at(j, t.right))));
                }
            }
        Mat rhs = c.delta_of(out.pi.col(d));
        require(lhs == rhs, ErrorKind::CoalgebraMorphismFailure,
                "(pi (x) pi) Delta_D != Delta_C pi at basis " + std::to_string(d));
        Scalar eps_c = c.eps_of(out.pi.col(d));
        require(eps_c == out.d.eps[d], ErrorKind::CoalgebraMorphismFailure,
                "eps_C pi != eps_D at basis " + std::to_string(d));
    }

    out.flags.surjective = rank(out.pi) == nc;
    out.kernel = kernel_basis(out.pi);

    // D as a left C*-module along pi: f.d = sum d1 f(pi(d2))
    FDModule dmod;
    dmod.algebra = a;
    dmod.side = Side::Left;
    dmod.dim = nd;
    for (int i = 0; i < nc; ++i) {
        Mat op(f, nd, nd);
        for (int col = 0; col < nd; ++col)
            for (const DeltaTerm& t : out.d.delta[col])
                op.at(t.left, col) = f.add(op.at(t.left, col), f.mul(t.coeff, out.pi.at(i, t.right)));
        dmod.action.push_back(std::move(op));
    }
    require(is_submodule(dmod, out.kernel), ErrorKind::Internal,
            "cover kernel is not stable under the corestricted action");
    out.flags.kernel_small = is_small(dmod, out.kernel);

    FDModule cmod = comodule_as_module(c, a, Side::Left);
    require(is_module_map(dmod, cmod, out.pi), ErrorKind::Internal,
            "pi is not C*-linear for the corestricted structure");
    out.flags.codense = is_codense_cover(dmod, cmod, out.pi);

    // compare with the maximal codense cover construction
    MaxCodenseCover mcc = maximal_codense_cover(cmod);
    if (mcc.cover.dim == nd) {
        // solve pi o psi = mcc.onto over the hom space
        std::vector<Mat> homs = hom_space(mcc.cover, dmod);
        if (!homs.empty()) {
            Mat sys(f, nc * mcc.cover.dim, int(homs.size()));
            for (size_t k = 0; k < homs.size(); ++k) {
                Mat comp = out.pi * homs[k];
                for (int r = 0; r < comp.rows; ++r)
                    for (int s = 0; s < comp.cols; ++s)
                        sys.at(r * mcc.cover.dim + s, int(k)) = comp.at(r, s);
            }
            Mat rhs(f, nc * mcc.cover.dim, 1);
            for (int r = 0; r < mcc.onto.rows; ++r)
                for (int s = 0; s < mcc.onto.cols; ++s)
                    rhs.at(r * mcc.cover.dim + s, 0) = mcc.onto.at(r, s);
            auto sol = solve(sys, rhs);
            if (sol) {
                Mat psi(f, nd, mcc.cover.dim);
                for (size_t k = 0; k < homs.size(); ++k) {
                    if (sgn(sol->at(int(k), 0)) == 0) continue;
                    psi = psi + homs[k].scaled(sol->at(int(k), 0));
                }
                out.flags.maximal_checked = rank(psi) == nd;
            }
        }
    }

    out.d_module = std::move(dmod);
    out.c_module = std::move(cmod);
    return out;
}

} // namespace comax
