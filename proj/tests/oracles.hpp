#pragma once

// Definitional brute-force oracles over small finite fields. These quantify
// over every submodule / every linear map literally, independent of the
// Rad/Soc shortcuts they are used to check.

#include "comax/module.hpp"

namespace comax::testing {

/// All module maps x -> y by scanning every matrix over F_p.
inline std::vector<Mat> all_module_maps(const FDModule& x, const FDModule& y) {
    FieldSpec f = x.field();
    const long p = long(f.characteristic);
    const int cells = x.dim * y.dim;
    double total = 1;
    for (int i = 0; i < cells; ++i) total *= double(p);
    if (total > double(1 << 20)) throw Error(ErrorKind::TooLarge, "map enumeration too large");
    std::vector<Mat> out;
    for (long idx = 0; idx < long(total); ++idx) {
        Mat m(f, y.dim, x.dim);
        long rest = idx;
        for (int i = 0; i < cells; ++i) {
            m.e[i] = Scalar(rest % p);
            rest /= p;
        }
        if (is_module_map(x, y, m)) out.push_back(std::move(m));
    }
    return out;
}

/// N small in M: N + L = M forces L = M, over all submodules L.
inline bool definitional_small(const FDModule& m, const Subspace& n) {
    for (const Subspace& l : brute_force_submodules(m))
        if (sum(n, l).is_full() && !l.is_full()) return false;
    return true;
}

/// N essential in M: N meets every nonzero submodule.
inline bool definitional_essential(const FDModule& m, const Subspace& n) {
    for (const Subspace& l : brute_force_submodules(m))
        if (!l.is_zero() && intersect(n, l).is_zero()) return false;
    return true;
}

/// pi: src ->> tgt codense: Hom(src, Ker pi / L) = 0 for every L <= Ker pi.
inline bool definitional_codense(const FDModule& src, const Mat& pi) {
    Subspace ker = kernel_basis(pi);
    SubmoduleModule km = submodule_module(src, ker);
    for (const Subspace& l : brute_force_submodules(km.mod)) {
        QuotientModule q = quotient_module(km.mod, l);
        if (q.mod.dim == 0) continue;
        for (const Mat& f : all_module_maps(src, q.mod))
            if (!f.is_zero()) return false;
    }
    return true;
}

/// M copolyform: nabla(M, M/N) = 0 for every small submodule N.
inline bool definitional_copolyform(const FDModule& m) {
    for (const Subspace& n : brute_force_submodules(m)) {
        if (!definitional_small(m, n)) continue;
        QuotientModule q = quotient_module(m, n);
        if (q.mod.dim == 0) continue;
        // maps with small image, checked definitionally
        for (const Mat& f : all_module_maps(m, q.mod)) {
            if (f.is_zero()) continue;
            Subspace img = Subspace::from_cols(f);
            // close the image into a submodule basis (it already is one)
            if (definitional_small(q.mod, img)) return false;
        }
    }
    return true;
}

} // namespace comax::testing
