#include "comax/props.hpp"

#include <sstream>

namespace comax {

namespace {

template <typename F>
Flag compute_flag(F&& fn) {
    Flag out;
    try {
        out.value = fn();
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

} // namespace

PropertyReport coalgebra_report(const Coalgebra& c) {
    PropertyReport r;
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    r.cocommutative = is_cocommutative(c);

    std::optional<Subspace> rad;
    try {
        rad = jacobson_radical(*a);
        r.radical_dim = rad->dim();
        r.radical_witness = *rad;
        r.coradical_witness = coradical(c);
        r.coradical_dim = r.coradical_witness->dim();
    } catch (const Error&) {
    }

    r.non_singular = compute_flag([&] {
        r.singular_witness = singular_submodule(regular_module(a, Side::Left));
        return r.singular_witness->is_zero();
    });
    r.cosemisimple = compute_flag([&] {
        if (!rad) jacobson_radical(*a); // rethrow the original failure
        return rad->is_zero();
    });
    // artinian: semiprime = semisimple
    r.cosemiprime = r.cosemisimple;
    r.hereditary = compute_flag([&] {
        if (!rad) jacobson_radical(*a);
        if (rad->is_zero()) return true;
        FDModule reg = regular_module(a, Side::Left);
        SubmoduleModule j = submodule_module(reg, *rad);
        return projective_cover(j.mod).p.dim == j.mod.dim;
    });
    r.coprime_simple = compute_flag([&] { return is_simple(*a); });
    r.copolyform_left =
        compute_flag([&] { return is_copolyform(comodule_as_module(c, a, Side::Left)); });
    r.copolyform_right =
        compute_flag([&] { return is_copolyform(comodule_as_module(c, a, Side::Right)); });
    r.self_injective_dual = compute_flag([&] {
        r.dual_hull_dim = injective_hull(regular_module(a, Side::Left)).e.dim;
        return r.dual_hull_dim == a->dim();
    });

    try {
        CoalgebraCover cov = covering_coalgebra(c);
        std::ostringstream os;
        os << "D dim " << cov.d.dim() << ", kernel dim " << cov.kernel.dim()
           << (cov.flags.surjective ? ", surjective" : ", NOT surjective")
           << (cov.flags.kernel_small ? ", small" : ", NOT small")
           << (cov.flags.codense ? ", codense" : ", NOT codense")
           << (cov.flags.maximal_checked ? ", maximal" : ", maximality unchecked");
        r.cover_summary = os.str();
    } catch (const Error& e) {
        r.cover_summary = std::string("error(") + e.what() + ")";
    }
    return r;
}

VerifyResult verify_nonsingular_equivalences(const Coalgebra& c) {
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    FDModule c_left = comodule_as_module(c, a, Side::Left);   // right comodule
    FDModule c_right = comodule_as_module(c, a, Side::Right); // left comodule

    bool copoly_right_comod = is_copolyform(c_left);
    bool copoly_left_comod = is_copolyform(c_right);
    bool dual_nonsingular = singular_submodule(regular_module(a, Side::Left)).is_zero();

    auto end_left = std::make_shared<const Algebra>(endomorphism_algebra(c_left).alg);
    bool end_left_right_ns = singular_submodule(regular_module(end_left, Side::Right)).is_zero();
    auto end_right = std::make_shared<const Algebra>(endomorphism_algebra(c_right).alg);
    bool end_right_left_ns = singular_submodule(regular_module(end_right, Side::Left)).is_zero();

    std::ostringstream os;
    os << "copolyform as right comodule: " << copoly_right_comod
       << ", End(C as left C*-module) right non-singular: " << end_left_right_ns
       << ", C* left non-singular: " << dual_nonsingular
       << ", End(C as right C*-module) left non-singular: " << end_right_left_ns
       << ", copolyform as left comodule: " << copoly_left_comod;
    VerifyResult vr;
    vr.detail = os.str();
    bool all = copoly_right_comod && end_left_right_ns && dual_nonsingular && end_right_left_ns &&
               copoly_left_comod;
    bool none = !copoly_right_comod && !end_left_right_ns && !dual_nonsingular &&
                !end_right_left_ns && !copoly_left_comod;
    vr.status = (all || none) ? VerifyStatus::Ok : VerifyStatus::Counterexample;
    return vr;
}

VerifyResult verify_cosemisimple_flat(const Coalgebra& c) {
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    bool cosemisimple = jacobson_radical(*a).is_zero();
    bool non_singular = singular_submodule(regular_module(a, Side::Left)).is_zero();
    bool flat_proxy = injective_hull(regular_module(a, Side::Left)).e.dim == a->dim();

    std::ostringstream os;
    os << "cosemisimple: " << cosemisimple << ", non-singular: " << non_singular
       << ", dual self-injective: " << flat_proxy;
    VerifyResult vr;
    vr.detail = os.str();
    vr.status = (cosemisimple == (non_singular && flat_proxy)) ? VerifyStatus::Ok
                                                               : VerifyStatus::Counterexample;
    return vr;
}

VerifyResult verify_coprime_dichotomy(const Coalgebra& c) {
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    VerifyResult vr;
    if (!is_simple(*a)) {
        vr.status = VerifyStatus::NotApplicable;
        vr.detail = "not coprime: dual algebra is not simple";
        return vr;
    }
    std::vector<FDModule> sample;
    sample.push_back(comodule_as_module(c, a, Side::Left));
    for (FDModule& s : distinct_simple_modules(a, Side::Left)) sample.push_back(std::move(s));
    CoalgebraCover cov = covering_coalgebra(c);
    sample.push_back(cov.d_module);

    std::ostringstream os;
    for (size_t i = 0; i < sample.size(); ++i) {
        const FDModule& m = sample[i];
        bool projective = projective_cover(m).p.dim == m.dim;
        bool injective = injective_hull(m).e.dim == m.dim;
        bool nonsing = singular_submodule(m).is_zero();
        os << "sample " << i << " (dim " << m.dim << "): projective " << projective
           << ", injective " << injective << ", Z=0 " << nonsing << "; ";
        if (!(projective && injective && nonsing)) {
            vr.status = VerifyStatus::Counterexample;
        }
    }
    vr.detail = os.str();
    return vr;
}

VerifyResult verify_cocommutative_theorem(const Coalgebra& c) {
    VerifyResult vr;
    if (!is_cocommutative(c)) {
        vr.status = VerifyStatus::NotApplicable;
        vr.detail = "not cocommutative";
        return vr;
    }
    auto a = std::make_shared<const Algebra>(dual_algebra(c));
    bool non_singular = singular_submodule(regular_module(a, Side::Left)).is_zero();
    if (!non_singular) {
        vr.detail = "premise not satisfied: coalgebra is singular";
        return vr; // vacuously ok
    }
    bool cosemisimple = jacobson_radical(*a).is_zero();
    vr.status = cosemisimple ? VerifyStatus::Ok : VerifyStatus::Counterexample;
    vr.detail = cosemisimple ? "cocommutative non-singular and cosemisimple"
                             : "cocommutative non-singular but NOT cosemisimple";
    return vr;
}

} // namespace comax
