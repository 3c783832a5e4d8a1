#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "comax/quotient.hpp"
#include "helpers.hpp"

using namespace comax;
using namespace comax::testing;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Algebra ut2() { return dual_algebra(path_coalgebra(quiver_ab())); }

// A as a one-sided module over itself through the quotient-ring embedding.
FDModule q_as_a_module(const QmaxResult& r, const Algebra& a, Side side) {
    FDModule m;
    m.algebra = std::make_shared<const Algebra>(a);
    m.side = side;
    m.dim = r.q.dim();
    for (int i = 0; i < a.dim(); ++i) {
        Mat img = r.embedding.col(i);
        m.action.push_back(side == Side::Right ? r.q.right_mult(img) : r.q.left_mult(img));
    }
    return m;
}
} // namespace

TEST_CASE("qmax of the upper triangular algebra is the full 2x2 matrix ring") {
    Algebra a = ut2();
    QmaxResult r = qmax(a, Side::Right);
    CHECK(r.q.dim() == 4);
    CHECK(validate_algebra(r.q).ok);
    CHECK(is_simple(r.q));
    WedderburnData w = wedderburn_blocks(r.q);
    CHECK(w.block_dims == std::vector<int>{4});
    CHECK(r.hull.dim == 4);
    CHECK(r.q_subspace.dim() == 4);

    // left-sided run gives the same answer for this algebra
    QmaxResult l = qmax(a, Side::Left);
    CHECK(l.q.dim() == 4);
    CHECK(is_simple(l.q));
}

TEST_CASE("qmax of a semisimple algebra is the algebra itself") {
    Algebra m2 = matrix_units_algebra(Q, 2);
    QmaxResult r = qmax(m2, Side::Right);
    CHECK(r.q.dim() == 4);
    CHECK(r.embedding.is_identity());
    CHECK(r.q.mult == m2.mult);
    CHECK(r.q.unit == m2.unit);
}

TEST_CASE("qmax of the truncated polynomial algebra is itself (self-injective)") {
    for (int n : {2, 3, 4}) {
        Algebra t = truncated_poly_algebra(Q, n);
        QmaxResult r = qmax(t, Side::Right);
        CHECK(r.q.dim() == n);
        CHECK(r.embedding.is_identity());
        CHECK(r.q.mult == t.mult);
        CHECK_FALSE(jacobson_radical(r.q).is_zero());
    }
}

TEST_CASE("the quotient-ring embedding is an essential extension of the regular module") {
    for (const Algebra& a : {ut2(), path_algebra(parse_quiver(
                                 "vertices: a b c\narrows:\nx: a -> b\ny: b -> c\n"))}) {
        QmaxResult r = qmax(a, Side::Right);
        FDModule qm = q_as_a_module(r, a, Side::Right);
        CHECK(validate_module(qm).ok);
        Subspace image = Subspace::from_span(r.embedding.transpose());
        CHECK(is_essential(qm, image));
    }
}

TEST_CASE("Johnson-style check: non-singular input gives semisimple quotient ring") {
    std::vector<Algebra> corpus = {
        ut2(),
        matrix_units_algebra(Q, 2),
        path_algebra(parse_quiver("vertices: a b\narrows:\nx: a -> b\ny: a -> b\n")),
        path_algebra(parse_quiver("vertices: a b c\narrows:\nx: a -> b\ny: b -> c\n")),
        split_torus_algebra(Q, 3),
    };
    for (const Algebra& a : corpus) {
        auto ap = std::make_shared<const Algebra>(a);
        if (!singular_submodule(regular_module(ap, Side::Right)).is_zero()) continue;
        QmaxResult r = qmax(a, Side::Right);
        CHECK(jacobson_radical(r.q).is_zero());
    }
}

TEST_CASE("socle fastpath: path algebras realise the sink block structure") {
    // a -> b: one sink with two incoming paths, so M_2
    Algebra e = qmax_socle_fastpath(path_algebra(quiver_ab()));
    CHECK(e.dim() == 4);
    CHECK(is_simple(e));

    // a => b: three paths into the sink, so M_3
    Algebra par = path_algebra(parse_quiver("vertices: a b\narrows:\nx: a -> b\ny: a -> b\n"));
    Algebra e3 = qmax_socle_fastpath(par);
    CHECK(e3.dim() == 9);
    CHECK(is_simple(e3));
    CHECK(qmax(par, Side::Right).q.dim() == 9);

    // semisimple: End(Soc(A_A)) = End(A_A) = A
    Algebra ss = split_torus_algebra(Q, 2);
    Algebra ess = qmax_socle_fastpath(ss);
    CHECK(ess.dim() == 2);
    CHECK(jacobson_radical(ess).is_zero());

    // singular algebras are rejected
    try {
        qmax_socle_fastpath(truncated_poly_algebra(Q, 3));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotNonSingular);
    }
}

TEST_CASE("fastpath agrees with the hull construction on non-singular corpus algebras") {
    std::vector<Quiver> quivers = {
        quiver_ab(),
        parse_quiver("vertices: a b c\narrows:\nx: a -> b\ny: b -> c\n"),
        parse_quiver("vertices: a b c\narrows:\nx: a -> c\ny: b -> c\n"),
        parse_quiver("vertices: a b c d\narrows:\nx: a -> b\ny: a -> c\nz: a -> d\n"),
    };
    for (const Quiver& qv : quivers) {
        Algebra a = path_algebra(qv);
        Algebra fast = qmax_socle_fastpath(a);
        QmaxResult full = qmax(a, Side::Right);
        CHECK(fast.dim() == full.q.dim());
        WedderburnData wf = wedderburn_blocks(fast);
        WedderburnData wq = wedderburn_blocks(full.q);
        CHECK(wf.block_dims == wq.block_dims);
        CHECK(wf.is_semisimple);
        CHECK(wq.is_semisimple);
    }
}

TEST_CASE("covering coalgebra of the a -> b path coalgebra") {
    Coalgebra c = path_coalgebra(quiver_ab());
    CoalgebraCover cov = covering_coalgebra(c);
    CHECK(cov.d.dim() == 4);
    CHECK(validate_coalgebra(cov.d).ok);
    // identify D structurally: its dual is the simple 2x2 matrix ring
    Algebra dstar = dual_algebra(cov.d);
    CHECK(is_simple(dstar));
    CHECK(wedderburn_blocks(dstar).block_dims == std::vector<int>{4});

    CHECK(cov.kernel.dim() == 1);
    CHECK(cov.flags.surjective);
    CHECK(cov.flags.kernel_small);
    CHECK(cov.flags.codense);
    CHECK(cov.flags.maximal_checked);
}

TEST_CASE("matrix coalgebras are their own covers (identity)") {
    for (int n : {1, 2, 3}) {
        Coalgebra c = matrix_coalgebra(Q, n);
        CoalgebraCover cov = covering_coalgebra(c);
        CHECK(cov.pi.is_identity());
        CHECK(cov.d == c);
        CHECK(cov.kernel.dim() == 0);
        CHECK(cov.flags.surjective);
        CHECK(cov.flags.kernel_small);
        CHECK(cov.flags.codense);
        CHECK(cov.flags.maximal_checked);
    }
}

TEST_CASE("truncated divided powers are their own covers") {
    for (int n : {2, 3, 4, 5}) {
        Coalgebra c = truncated_divided_power(Q, n);
        CoalgebraCover cov = covering_coalgebra(c);
        CHECK(cov.pi.is_identity());
        CHECK(cov.d == c);
        CHECK(cov.kernel.dim() == 0);
        CHECK(cov.flags.codense);
        CHECK(cov.flags.maximal_checked);
    }
}

TEST_CASE("acyclic quivers: the cover is the direct sum of sink matrix coalgebras") {
    std::vector<std::string> quivers = {
        "vertices: a b c\narrows:\nx: a -> b\ny: b -> c\n",
        "vertices: a b c\narrows:\nx: a -> b\ny: a -> c\n",
        "vertices: a b c d\narrows:\nx: a -> c\ny: b -> c\nz: b -> d\n",
    };
    for (const std::string& text : quivers) {
        Quiver qv = parse_quiver(text);
        Coalgebra c = path_coalgebra(qv);
        CoalgebraCover cov = covering_coalgebra(c);
        std::map<int, int> sinks = sinks_and_path_counts(qv);
        int expect_dim = 0;
        std::vector<int> expect_blocks;
        for (auto& [v, n] : sinks) {
            expect_dim += n * n;
            expect_blocks.push_back(n * n);
        }
        std::sort(expect_blocks.rbegin(), expect_blocks.rend());
        CHECK(cov.d.dim() == expect_dim);
        WedderburnData w = wedderburn_blocks(dual_algebra(cov.d));
        CHECK(w.is_semisimple);
        CHECK(w.block_dims == expect_blocks);
        CHECK(cov.flags.surjective);
        CHECK(cov.flags.kernel_small);
        CHECK(cov.flags.codense);
        CHECK(cov.flags.maximal_checked);
        CHECK(cov.kernel.dim() == cov.d.dim() - c.dim());
    }
}

TEST_CASE("cover kernel is a coideal: Delta(K) inside K (x) D + D (x) K") {
    for (const Coalgebra& c : {path_coalgebra(quiver_ab()),
                               path_coalgebra(parse_quiver(
                                   "vertices: a b c\narrows:\nx: a -> b\ny: b -> c\n"))}) {
        CoalgebraCover cov = covering_coalgebra(c);
        const int nd = cov.d.dim();
        // K (x) D + D (x) K inside D (x) D
        Mat full = Mat::identity(Q, nd);
        Mat left = kron(cov.kernel.basis, full);
        Mat right = kron(full, cov.kernel.basis);
        Subspace coideal_bound = Subspace::from_span(vstack(left, right));
        for (int i = 0; i < cov.kernel.dim(); ++i)
            CHECK(coideal_bound.contains_vector(cov.d.delta_of(cov.kernel.basis_col(i))));
        // and eps vanishes on the kernel
        for (int i = 0; i < cov.kernel.dim(); ++i)
            CHECK(FieldSpec::is_zero(cov.d.eps_of(cov.kernel.basis_col(i))));
    }
}
