#pragma once

#include <optional>

#include "comax/quotient.hpp"

namespace comax {

/// One classification flag; `error` carries the reason when not computable
/// (per-flag isolation, one NonSplit must not poison the rest).
struct Flag {
    std::optional<bool> value;
    std::string error;

    bool known() const { return value.has_value(); }
    bool is(bool b) const { return value.has_value() && *value == b; }
};

struct PropertyReport {
    Flag non_singular;
    Flag cosemisimple;
    Flag cosemiprime;
    Flag hereditary;
    Flag coprime_simple;
    Flag copolyform_left;
    Flag copolyform_right;
    Flag self_injective_dual; // flatness proxy: C* self-injective on the left
    bool cocommutative = false;
    int coradical_dim = -1;
    int radical_dim = -1;
    std::string cover_summary;

    // recomputable witnesses behind the flags
    std::optional<Subspace> singular_witness;  // Z of C* as left module over itself
    std::optional<Subspace> radical_witness;   // Jac(C*)
    std::optional<Subspace> coradical_witness; // C0 inside C
    int dual_hull_dim = -1;                    // dim E(C* as left module)
};

PropertyReport coalgebra_report(const Coalgebra& c);

enum class VerifyStatus { Ok, Counterexample, NotApplicable };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Ok;
    std::string detail;
    bool ok() const { return status != VerifyStatus::Counterexample; }
};

/// Agreement of: copolyformness on both sides, non-singularity of C*, and
/// non-singularity read off the endomorphism rings of C.
VerifyResult verify_nonsingular_equivalences(const Coalgebra& c);

/// cosemisimple <=> non_singular and self-injective dual.
VerifyResult verify_cosemisimple_flat(const Coalgebra& c);

/// For coprime (simple dual) coalgebras: sample comodules are projective,
/// injective and non-singular over C*.
VerifyResult verify_coprime_dichotomy(const Coalgebra& c);

/// Cocommutative + non-singular implies cosemisimple (finite-dimensional
/// coalgebras are semiperfect).
VerifyResult verify_cocommutative_theorem(const Coalgebra& c);

} // namespace comax
