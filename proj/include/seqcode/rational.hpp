#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "seqcode/errors.hpp"

namespace seqcode {

// Exact arithmetic everywhere. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// the code reals need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// 2^p as an exact integer-valued rational, p >= 0.
inline Rational pow2(unsigned long p) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, p);
  return Rational(z);
}

// 2^-p exactly.
inline Rational pow2_inv(unsigned long p) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, p);
  Rational r(Integer(1), z);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline bool is_natural(const Rational& x) {
  return is_integer(x) && sgn(x) >= 0;
}

inline Integer rat_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Integer rat_ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// Fractional part, always in [0, 1).
inline Rational frac_part(const Rational& x) {
  Rational f = x - Rational(rat_floor(x));
  f.canonicalize();
  return f;
}

// y is p-rational iff y * 2^p is an integer.
inline bool is_p_rational(const Rational& y, unsigned long p) {
  return is_integer(y * pow2(p));
}

// Binary digit of x at position i >= 1: floor(x * 2^i) mod 2. For
// non-dyadic x in [0,1] this is the unique expansion; dyadic x gets the
// terminating one.
inline int bit_at(const Rational& x, unsigned long i) {
  Integer n = rat_floor(x * pow2(i));
  return mpz_tstbit(n.get_mpz_t(), 0) ? 1 : 0;
}

inline bool is_dyadic(const Rational& x) {
  Integer d = x.get_den();
  // den is 2^k iff den has a single set bit
  return mpz_popcount(d.get_mpz_t()) == 1;
}

// Renders "a/b", or just "a" for integers.
inline std::string rat_to_string(const Rational& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "a", "a/b", with optional sign.
inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw DomainError("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace seqcode
