#pragma once

#include <memory>
#include <vector>

#include "comax/algebra.hpp"

namespace comax {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

/// Finite-dimensional one-sided module by one action matrix per algebra
/// basis element. Elements are column vectors. For left modules
/// act(ab) = act(a) act(b); for right modules (action written on the right)
/// act(ab) = act(b) act(a).
struct FDModule {
    std::shared_ptr<const Algebra> algebra;
    Side side = Side::Left;
    int dim = 0;
    std::vector<Mat> action;

    FieldSpec field() const { return algebra->field; }
    /// Action of an algebra element given by its coordinate column.
    Mat act(const Mat& alg_coords) const;
    const Mat& act_basis(int i) const { return action[i]; }
};

FDModule regular_module(std::shared_ptr<const Algebra> a, Side side);
ValidationReport validate_module(const FDModule& m);

bool is_module_map(const FDModule& x, const FDModule& y, const Mat& f);
bool is_submodule(const FDModule& m, const Subspace& s);

/// Canonical (RREF in vectorised coordinates) basis of Hom(x, y).
std::vector<Mat> hom_space(const FDModule& x, const FDModule& y);
int hom_dim(const FDModule& x, const FDModule& y);

struct RadSoc {
    Subspace radical;
    Subspace socle;
};
/// Rad(M) = J M and Soc(M) = ann_M(J), side-appropriately.
RadSoc radical_socle(const FDModule& m);

/// N small in M iff N lies in the radical; N essential iff it contains the
/// socle (both valid for finite-dimensional modules over artinian algebras).
bool is_small(const FDModule& m, const Subspace& n);
bool is_essential(const FDModule& m, const Subspace& n);

/// Z(M): elements annihilated by the same-side socle of the regular module
/// (a one-sided ideal is essential iff it contains that socle).
Subspace singular_submodule(const FDModule& m);

/// Dual space with the side swapped and transposed action.
FDModule k_dual(const FDModule& m);

struct SubmoduleModule {
    FDModule mod;
    Mat inclusion; // parent_dim x sub_dim
};
SubmoduleModule submodule_module(const FDModule& m, const Subspace& u);

struct QuotientModule {
    FDModule mod;
    Mat projection; // quot_dim x parent_dim
    Mat section;    // parent_dim x quot_dim (linear class representatives)
};
QuotientModule quotient_module(const FDModule& m, const Subspace& u);

struct DirectSumModule {
    FDModule mod;
    std::vector<int> offsets; // block starts, one per part
};
DirectSumModule direct_sum_module(const std::vector<FDModule>& parts,
                                  std::shared_ptr<const Algebra> algebra, Side side);

struct ProjectiveCover {
    FDModule p;
    Mat onto; // m_dim x p_dim, surjective with small kernel
    std::vector<FDModule> summands;
};
ProjectiveCover projective_cover(const FDModule& m);

struct InjectiveHull {
    FDModule e;
    Mat embedding; // e_dim x m_dim, injective and essential
    std::vector<FDModule> summands;
};
InjectiveHull injective_hull(const FDModule& m);

struct TraceReject {
    Subspace trace_of_x_in_target;    // Tr(X, T) = sum of images
    Subspace reject_of_target_into_x; // Re(T, X) = intersection of kernels
};
TraceReject trace_and_reject(const FDModule& x, const FDModule& target);

/// Cosingular ideal: maps with small image = Hom(X, Rad Y) inside Hom(X, Y).
std::vector<Mat> nabla(const FDModule& x, const FDModule& y);

struct EndAlgebra {
    Algebra alg;            // composition algebra f*g = f o g
    std::vector<Mat> basis; // the endomorphism matrices realising the basis
    Mat coords_of(const FDModule& m, const Mat& endo) const;
};
EndAlgebra endomorphism_algebra(const FDModule& m);

bool is_copolyform(const FDModule& m);
bool is_hollow(const FDModule& m);
bool is_epiform(const FDModule& m);

/// pi must be a surjective module map src -> tgt; codense iff the projective
/// cover of the source has no nonzero map into Ker pi.
bool is_codense_cover(const FDModule& src, const FDModule& tgt, const Mat& pi);

struct MaxCodenseCover {
    FDModule cover;
    Mat onto;
};
/// P / Tr(P, Ker pi) with the induced epimorphism, verified codense.
MaxCodenseCover maximal_codense_cover(const FDModule& m);

/// All submodules, finite fields only, guarded by p^dim <= 2^16.
std::vector<Subspace> brute_force_submodules(const FDModule& m);

/// Reject of M in the class of small modules (intersection of all U with
/// M/U small in its injective hull). Finite fields only.
Subspace small_reject(const FDModule& m);

/// C as a one-sided module over its dual algebra (right comodules are left
/// C*-modules and vice versa): Side::Left gives f.c = sum c1 f(c2).
FDModule comodule_as_module(const Coalgebra& c, std::shared_ptr<const Algebra> dual, Side side);

/// One representative per isomorphism class of simple modules.
std::vector<FDModule> distinct_simple_modules(std::shared_ptr<const Algebra> a, Side side);

} // namespace comax
