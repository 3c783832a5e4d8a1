#include "comax/field.hpp"

namespace comax {

FieldSpec FieldSpec::prime_field(unsigned long p) {
    mpz_class pz(static_cast<unsigned long>(p));
    require(p >= 2 && mpz_probab_prime_p(pz.get_mpz_t(), 40) != 0, ErrorKind::InvalidArgument,
            "field characteristic must be prime, got " + std::to_string(p));
    return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q" || text == "rationals") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        try {
            return prime_field(std::stoul(text.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string FieldSpec::name() const {
    return is_rational() ? "q" : "fp:" + std::to_string(characteristic);
}

Scalar FieldSpec::normalize(const Scalar& x) const {
    Scalar r = x;
    r.canonicalize();
    if (is_rational()) return r;
    mpz_class p(characteristic);
    mpz_class num = r.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = r.get_den() % p;
    if (den == 0) fail(ErrorKind::InvalidArgument, "denominator divisible by the characteristic");
    if (den == 1) return Scalar(num);
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        fail(ErrorKind::Internal, "non-invertible denominator mod p");
    mpz_class res = (num * deninv) % p;
    if (res < 0) res += p;
    return Scalar(res);
}

Scalar FieldSpec::from_long(long v) const { return normalize(Scalar(v)); }

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a + b;
    mpz_class r = (a.get_num() + b.get_num()) % mpz_class(characteristic);
    return Scalar(r);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a - b;
    mpz_class r = (a.get_num() - b.get_num()) % mpz_class(characteristic);
    if (r < 0) r += characteristic;
    return Scalar(r);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % mpz_class(characteristic);
    return Scalar(r);
}

Scalar FieldSpec::neg(const Scalar& a) const {
    if (is_rational()) return -a;
    if (is_zero(a)) return a;
    return Scalar(mpz_class(characteristic) - a.get_num());
}

Scalar FieldSpec::inv(const Scalar& a) const {
    require(!is_zero(a), ErrorKind::InvalidArgument, "division by zero");
    if (is_rational()) return 1 / a;
    mpz_class p(characteristic), r;
    if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        fail(ErrorKind::Internal, "non-invertible residue");
    return Scalar(r);
}

Scalar FieldSpec::parse_scalar(const std::string& text) const {
    Scalar r;
    if (r.set_str(text, 10) != 0)
        fail(ErrorKind::ParseError, "bad scalar literal '" + text + "'");
    return normalize(r);
}

} // namespace comax
