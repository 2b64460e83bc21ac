#include "seqop/scalar.hpp"

namespace seqop {

Field Field::prime(long p) {
    if (p < 2) throw ParseError("field characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ParseError("field characteristic must be prime: " + std::to_string(p));
    return Field(Kind::prime, p);
}

Field Field::parse(const std::string& spec) {
    if (spec == "Q" || spec == "q") return rationals();
    if (spec.rfind("Fp:", 0) == 0 || spec.rfind("fp:", 0) == 0)
        return prime(std::stol(spec.substr(3)));
    if (spec.rfind("F", 0) == 0 && spec.size() > 1 && std::isdigit(static_cast<unsigned char>(spec[1])))
        return prime(std::stol(spec.substr(1)));
    throw ParseError("unknown field spec '" + spec + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const {
    return kind_ == Kind::rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Field::reduce(const Scalar& x) const {
    if (kind_ == Kind::rationals) {
        Scalar y = x;
        y.canonicalize();
        return y;
    }
    Scalar y = x;
    y.canonicalize();
    mpz_class num = y.get_num(), den = y.get_den();
    mpz_class p(p_);
    mpz_class n = num % p;
    if (n < 0) n += p;
    if (den == 1) return Scalar(n);
    // Invert the denominator mod p.
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw InvariantError("denominator divisible by field characteristic");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InvariantError("non-invertible denominator in prime field");
    mpz_class r = (n * dinv) % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw InvariantError("division by zero");
    if (kind_ == Kind::rationals) return Scalar(1) / a;
    Scalar r = reduce(a);
    mpz_class v = r.get_num(), p(p_), vinv;
    if (mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InvariantError("non-invertible element in prime field");
    return Scalar(vinv);
}

std::string scalar_to_string(const Scalar& x) { return x.get_str(); }

Scalar scalar_from_string(const std::string& s, const Field& f) {
    try {
        Scalar x(s);
        return f.reduce(x);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad scalar literal '" + s + "'");
    }
}

} // namespace seqop
