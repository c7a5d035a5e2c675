// Exact scalar types (GMP-backed) and small integer helpers shared by all
// headers.
#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace littlewood {

using Int = mpz_class;
using Rat = mpq_class;

// The height of a polynomial (max |coefficient|) is an exact nonnegative Int.
using Height = Int;

inline const Int kIntZero = 0;

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline Int abs_int(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Smallest s >= 0 with s*s >= n; 0 for n <= 0.
inline Int isqrt_ceil(const Int& n) {
  if (n <= 0) return 0;
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) ++s;
  return s;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool divisible(const Int& a, const Int& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

// Exact quotient; the caller guarantees b | a and b != 0.
inline Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool fits_long(const Int& a) { return mpz_fits_slong_p(a.get_mpz_t()) != 0; }

}  // namespace littlewood
