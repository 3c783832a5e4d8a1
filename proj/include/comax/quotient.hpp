#pragma once

#include "comax/module.hpp"

namespace comax {

/// Maximal ring of quotients of a, realised inside the injective hull E of
/// the regular module: the reject subspace Q = { x in E : h(x) = 0 for all
/// h in End(E) vanishing on the embedded copy of a }, carrying the ring
/// structure transported from End over End(E) through evaluation at the
/// embedded unit.
struct QmaxResult {
    Algebra q;
    Mat embedding; // q.dim x a.dim, unital multiplicative injection a -> q
    FDModule hull; // E(a) as a one-sided module over a
    Mat hull_embedding; // hull.dim x a.dim
    Subspace q_subspace; // Q inside the hull
};

QmaxResult qmax(const Algebra& a, Side side);

/// End of Soc(A_A) as an algebra; valid for right non-singular A
/// (NotNonSingular otherwise). For path algebras of acyclic quivers the
/// block structure matches the sink path counts.
Algebra qmax_socle_fastpath(const Algebra& a);

struct CoverFlags {
    bool surjective = false;
    bool kernel_small = false;
    bool codense = false;
    bool maximal_checked = false;
};

struct CoalgebraCover {
    Coalgebra d;
    Mat pi;           // c.dim x d.dim coalgebra epimorphism
    Subspace kernel;  // Ker pi inside D
    CoverFlags flags;
    FDModule d_module; // D as left C*-module (coaction corestricted along pi)
    FDModule c_module; // C as left C*-module
};

/// D = (Q^r_max(C*))^* with pi the transpose of the quotient-ring embedding;
/// verifies the coalgebra-morphism identities, smallness and codensity of
/// the kernel, and agreement with the maximal codense cover construction.
CoalgebraCover covering_coalgebra(const Coalgebra& c);

/// Structure-constant equality ignoring labels.
bool same_structure(const Coalgebra& a, const Coalgebra& b);

} // namespace comax
