#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "comax/subspace.hpp"

using namespace comax;

namespace {

// Independent span oracle: all p^k coefficient combinations of the rows.
std::set<std::vector<Scalar>> span_set(const Mat& rows) {
    FieldSpec f = rows.field;
    std::set<std::vector<Scalar>> out;
    long p = long(f.characteristic);
    long combos = 1;
    for (int i = 0; i < rows.rows; ++i) combos *= p;
    for (long idx = 0; idx < combos; ++idx) {
        std::vector<Scalar> v(rows.cols, f.zero());
        long rest = idx;
        for (int i = 0; i < rows.rows; ++i) {
            Scalar c = f.from_long(rest % p);
            rest /= p;
            for (int j = 0; j < rows.cols; ++j)
                v[j] = f.add(v[j], f.mul(c, rows.at(i, j)));
        }
        out.insert(v);
    }
    return out;
}

Mat lcg_matrix(FieldSpec f, int rows, int cols, unsigned seed) {
    Mat m(f, rows, cols);
    unsigned s = seed;
    for (auto& e : m.e) {
        s = s * 1664525u + 1013904223u;
        e = f.from_long(long(s >> 16) % 7 - 3);
    }
    return m;
}

} // namespace

TEST_CASE("rref: identity, zero, and the rank-1 example") {
    FieldSpec q = FieldSpec::rationals();
    auto id = Mat::identity(q, 3);
    RrefResult r = rref(id);
    CHECK(r.m == id);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    CHECK(r.rank == 3);

    RrefResult z = rref(Mat::zero(q, 2, 4));
    CHECK(z.m == Mat::zero(q, 2, 4));
    CHECK(z.pivots.empty());
    CHECK(z.rank == 0);

    // hand elimination: R2 -= 2 R1
    Mat m = Mat::from_int_rows(q, {{1, 2}, {2, 4}});
    RrefResult rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.m == Mat::from_int_rows(q, {{1, 2}, {0, 0}}));
}

TEST_CASE("rref is idempotent and rank-nullity holds") {
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(5)}) {
        for (unsigned seed : {1u, 2u, 3u, 4u}) {
            Mat m = lcg_matrix(f, 4, 6, seed);
            RrefResult r1 = rref(m);
            RrefResult r2 = rref(r1.m);
            CHECK(r1.m == r2.m);
            CHECK(r1.rank == r2.rank);
            CHECK(r1.rank + kernel_basis(m).dim() == m.cols);
        }
    }
}

TEST_CASE("serial and parallel kernels agree") {
    FieldSpec q = FieldSpec::rationals();
    Mat m = lcg_matrix(q, 18, 25, 7u);
    RrefResult a = detail::rref_serial(m);
    RrefResult b = detail::rref_parallel(m);
    CHECK(a.m == b.m);
    CHECK(a.pivots == b.pivots);

    Mat x = lcg_matrix(q, 13, 17, 8u);
    Mat y = lcg_matrix(q, 17, 11, 9u);
    CHECK(detail::mul_serial(x, y) == detail::mul_parallel(x, y));
}

TEST_CASE("kernel_basis examples") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(kernel_basis(Mat::identity(q, 4)).dim() == 0);
    CHECK(kernel_basis(Mat::zero(q, 2, 3)).dim() == 3);

    // [[1,1]] over F2: enumerate F_2^2 by hand -> only (0,0) and (1,1) die
    FieldSpec f2 = FieldSpec::prime_field(2);
    Mat m = Mat::from_int_rows(f2, {{1, 1}});
    std::vector<std::vector<long>> killed;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            if ((a + b) % 2 == 0 && (a != 0 || b != 0)) killed.push_back({a, b});
    REQUIRE(killed.size() == 1);
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 1);
    CHECK(k.basis == Mat::from_int_rows(f2, killed));
}

TEST_CASE("subspace ops: trivial examples") {
    FieldSpec q = FieldSpec::rationals();
    Subspace e1 = Subspace::from_span(Mat::from_int_rows(q, {{1, 0}}));
    Subspace e2 = Subspace::from_span(Mat::from_int_rows(q, {{0, 1}}));
    SubspaceOps ops = subspace_ops(e1, e2);
    CHECK(ops.sum.is_full());
    CHECK(ops.intersection.is_zero());
    CHECK_FALSE(ops.contains);

    Subspace a = Subspace::from_span(Mat::from_int_rows(q, {{1, 2, 3}}));
    Subspace b = Subspace::from_span(Mat::from_int_rows(q, {{1, 2, 3}, {0, 1, 1}}));
    SubspaceOps o2 = subspace_ops(a, b);
    CHECK(o2.sum == b);
    CHECK(o2.intersection == a);
    CHECK(o2.contains);

    CHECK_THROWS_AS(subspace_ops(e1, Subspace::zero(q, 3)), Error);
}

TEST_CASE("subspace ops agree with exhaustive enumeration over small fields") {
    for (unsigned long p : {2ul, 3ul}) {
        FieldSpec f = FieldSpec::prime_field(p);
        for (unsigned seed = 1; seed <= 6; ++seed) {
            Subspace a = Subspace::from_span(lcg_matrix(f, 2, 4, seed));
            Subspace b = Subspace::from_span(lcg_matrix(f, 2, 4, seed + 100));
            SubspaceOps ops = subspace_ops(a, b);

            auto sa = span_set(a.basis), sb = span_set(b.basis);
            std::set<std::vector<Scalar>> inter;
            for (const auto& v : sa)
                if (sb.count(v)) inter.insert(v);
            CHECK(span_set(ops.intersection.basis) == inter);
            CHECK(span_set(ops.sum.basis) == span_set(vstack(a.basis, b.basis)));
            bool contained = true;
            for (const auto& v : sa)
                if (!sb.count(v)) contained = false;
            CHECK(ops.contains == contained);
            // modular law dimensions
            CHECK(ops.sum.dim() + ops.intersection.dim() == a.dim() + b.dim());
        }
    }
}

TEST_CASE("canonical RREF representative makes equality structural") {
    FieldSpec q = FieldSpec::rationals();
    Subspace a = Subspace::from_span(Mat::from_int_rows(q, {{2, 4, 6}, {1, 1, 1}}));
    Subspace b = Subspace::from_span(Mat::from_int_rows(q, {{3, 5, 7}, {1, 3, 5}}));
    CHECK(a == b); // same plane, different spanning sets
}

TEST_CASE("solve returns a particular solution or nullopt") {
    FieldSpec q = FieldSpec::rationals();
    Mat a = Mat::from_int_rows(q, {{1, 2}, {3, 4}});
    Mat b = Mat::from_int_rows(q, {{5}, {6}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);

    Mat sing = Mat::from_int_rows(q, {{1, 1}, {1, 1}});
    Mat rhs = Mat::from_int_rows(q, {{0}, {1}});
    CHECK_FALSE(solve(sing, rhs).has_value());
}

TEST_CASE("prime field arithmetic is canonical") {
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(f5.from_long(-3) == Scalar(2));
    CHECK(f5.inv(Scalar(2)) == Scalar(3));
    CHECK(f5.normalize(Scalar(7, 3)) == f5.div(Scalar(2), Scalar(3)));
    CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);

    FieldSpec q = FieldSpec::rationals();
    CHECK(q.parse_scalar("-4/6") == Scalar(-2, 3));
    CHECK(FieldSpec::format_scalar(Scalar(-2, 3)) == "-2/3");
}
