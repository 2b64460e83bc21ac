#pragma once

#include <gmpxx.h>

#include <string>

#include "seqop/errors.hpp"

namespace seqop {

// Exact coefficients: arbitrary-precision rationals. Prime-field elements are
// stored as integers in [0, p) inside the same type; all arithmetic goes
// through a Field so the two cases share every downstream algorithm.
using Scalar = mpq_class;

class Field {
  public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(long p);
    static Field parse(const std::string& spec); // "Q" or "Fp:<p>"

    Kind kind() const { return kind_; }
    long characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
    std::string name() const;

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long v) const { return reduce(Scalar(v)); }

    // Canonical representative: identity over Q, value mod p over F_p.
    Scalar reduce(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return reduce(a) == reduce(b); }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

  private:
    Field(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

std::string scalar_to_string(const Scalar& x);
Scalar scalar_from_string(const std::string& s, const Field& f);

} // namespace seqop
