#pragma once

// Shared test fixtures: hand-built reference algebras and small utilities.
// These are written from the defining formulas directly, independent of the
// library constructors they are checked against.

#include "comax/algebra.hpp"
#include "comax/quiver.hpp"

namespace comax::testing {

inline Quiver quiver_ab() { return parse_quiver("vertices: a b\narrows:\nx: a -> b\n"); }

inline Quiver quiver_loop() { return parse_quiver("vertices: 1\narrows:\nx: 1 -> 1\n"); }

/// M_n(k) on matrix units, row-major: E_ab E_cd = [b==c] E_ad.
inline Algebra matrix_units_algebra(FieldSpec f, int n) {
    Algebra a;
    a.field = f;
    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.labels.push_back("E" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    a.mult.assign(size_t(d) * d, {});
    a.unit.assign(d, f.zero());
    for (int i = 0; i < n; ++i) a.unit[idx(i, i)] = f.one();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        a.mult[size_t(idx(i, j)) * d + idx(k, l)].push_back({idx(i, l), f.one()});
    return a;
}

/// k[Z]/(Z^n) with basis 1, Z, ..., Z^{n-1}.
inline Algebra truncated_poly_algebra(FieldSpec f, int n) {
    Algebra a;
    a.field = f;
    for (int i = 0; i < n; ++i) a.labels.push_back(i == 0 ? "1" : "Z^" + std::to_string(i));
    a.mult.assign(size_t(n) * n, {});
    a.unit.assign(n, f.zero());
    a.unit[0] = f.one();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.mult[size_t(i) * n + j].push_back({i + j, f.one()});
    return a;
}

/// k^m, unit = all-ones.
inline Algebra split_torus_algebra(FieldSpec f, int m) {
    Algebra a;
    a.field = f;
    a.mult.assign(size_t(m) * m, {});
    a.unit.assign(m, f.one());
    for (int i = 0; i < m; ++i) {
        a.labels.push_back("g" + std::to_string(i));
        a.mult[size_t(i) * m + i].push_back({i, f.one()});
    }
    return a;
}

inline Subspace span_of_basis_indices(FieldSpec f, int ambient, const std::vector<int>& idx) {
    Mat rows(f, int(idx.size()), ambient);
    for (size_t i = 0; i < idx.size(); ++i) rows.at(int(i), idx[i]) = 1;
    return Subspace::from_span(rows);
}

} // namespace comax::testing
