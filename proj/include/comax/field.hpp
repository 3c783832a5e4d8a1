#pragma once

#include <gmpxx.h>

#include <string>

#include "comax/errors.hpp"

namespace comax {

/// Exact scalar. Over the rationals this is a canonical gcd-reduced fraction
/// with positive denominator; over F_p the invariant is denominator 1 and a
/// least nonnegative residue numerator. All canonicalisation goes through
/// FieldSpec, so entry-wise equality of scalars is semantic equality.
using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    unsigned long characteristic = 0; // 0 for Q, the prime p otherwise

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(unsigned long p);

    /// Parses "q" / "rationals" / "fp:<p>".
    static FieldSpec parse(const std::string& text);
    std::string name() const;

    bool operator==(const FieldSpec&) const = default;
    bool is_rational() const { return kind == FieldKind::Rationals; }

    /// Canonical representative of x in this field (mod-p reduction or
    /// fraction canonicalisation). Over F_p the denominator is inverted.
    Scalar normalize(const Scalar& x) const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long v) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
    static bool is_one(const Scalar& a) { return a == 1; }

    /// Scalar <-> decimal string ("n", "n/d", or a residue).
    Scalar parse_scalar(const std::string& text) const;
    static std::string format_scalar(const Scalar& a) { return a.get_str(); }
};

} // namespace comax
