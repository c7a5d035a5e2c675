// Dense univariate polynomials with arbitrary-precision integer
// coefficients, plus the measurement functions (degree, height, content)
// used throughout.
#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/numeric.hpp"

namespace littlewood {

// Coefficients are stored ascending from the constant term. Canonical form:
// the top stored coefficient is nonzero; the zero polynomial is the empty
// sequence. Equality is therefore plain coefficient comparison. Values are
// immutable in spirit: every operation returns a fresh polynomial, and
// set_coeff exists for builders that fill a scratch instance in place.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Int constant) {
    c_.push_back(std::move(constant));
    trim();
  }
  explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static UniPoly monomial(int k, Int coeff = Int(1)) {
    if (coeff == 0) return UniPoly();
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c.back() = std::move(coeff);
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  // Degree; -1 is the sentinel for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of X^i; zero outside the stored range.
  const Int& coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kIntZero;
    return c_[static_cast<size_t>(i)];
  }

  const Int& leading() const {
    assert(!c_.empty());
    return c_.back();
  }

  const std::vector<Int>& coeffs() const { return c_; }

  // In-place coefficient write for builders; keeps the canonical form.
  void set_coeff(int i, const Int& v) {
    if (i >= static_cast<int>(c_.size())) {
      if (v == 0) return;
      c_.resize(static_cast<size_t>(i) + 1, Int(0));
    }
    c_[static_cast<size_t>(i)] = v;
    trim();
  }
  void set_coeff(int i, long v) {
    if (i >= static_cast<int>(c_.size())) {
      if (v == 0) return;
      c_.resize(static_cast<size_t>(i) + 1, Int(0));
    }
    c_[static_cast<size_t>(i)] = v;
    trim();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // Orders by degree, then by coefficients from the top down. Used to keep
  // factor lists canonical.
  friend bool lex_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      const int c = cmp(a.c_[static_cast<size_t>(i)], b.c_[static_cast<size_t>(i)]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return UniPoly(std::move(c));
}

inline UniPoly operator-(const UniPoly& a) {
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) v = -v;
  return UniPoly(std::move(c));
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return UniPoly(std::move(c));
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    const Int& ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(c));
}

inline UniPoly operator*(const Int& s, const UniPoly& a) {
  if (s == 0) return UniPoly();
  std::vector<Int> c(a.coeffs());
  for (auto& v : c) v *= s;
  return UniPoly(std::move(c));
}

inline UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly r{1};
  UniPoly base = a;
  while (e != 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return r;
}

inline Height height(const UniPoly& f) {
  Int h = 0;
  for (const Int& v : f.coeffs()) {
    Int a = abs_int(v);
    if (a > h) h = std::move(a);
  }
  return h;
}

// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
inline Int content(const UniPoly& f) {
  Int g = 0;
  for (const Int& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// f = sign(lc) * content * primitive_part; the primitive part has content 1
// and positive leading coefficient.
inline UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("primitive_part: zero polynomial");
  Int c = content(f);
  if (sign_of(f.leading()) < 0) c = -c;
  std::vector<Int> out(f.coeffs());
  for (auto& v : out) v = divexact(v, c);
  return UniPoly(std::move(out));
}

inline UniPoly derivative(const UniPoly& f) {
  if (f.degree() < 1) return UniPoly();
  std::vector<Int> c(static_cast<size_t>(f.degree()), Int(0));
  for (int i = 1; i <= f.degree(); ++i) c[static_cast<size_t>(i - 1)] = Int(i) * f.coeff(i);
  return UniPoly(std::move(c));
}

inline Int norm2_squared(const UniPoly& f) {
  Int s = 0;
  for (const Int& v : f.coeffs()) mpz_addmul(s.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
  return s;
}

// Sound coefficient bound for integer factors: any factor of f (of degree up
// to deg f) has height at most 2^deg(f) * ceil(|f|_2) * |lc(f)|.
inline Int mignotte_bound(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("mignotte_bound: zero polynomial");
  Int b = isqrt_ceil(norm2_squared(f));
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b * abs_int(f.leading());
}

inline Int evaluate(const UniPoly& f, const Int& x) {
  Int acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    acc *= x;
    acc += f.coeff(i);
  }
  return acc;
}

// Attempts the exact division f = g*q over the integers. Returns false (and
// leaves *q unspecified) when g does not divide f. g must be nonzero.
inline bool try_divide_exact(const UniPoly& f, const UniPoly& g, UniPoly* q = nullptr) {
  if (g.is_zero()) throw std::invalid_argument("try_divide_exact: division by zero");
  if (f.is_zero()) {
    if (q) *q = UniPoly();
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<Int> rem(f.coeffs());
  std::vector<Int> quot(static_cast<size_t>(f.degree() - g.degree()) + 1, Int(0));
  const Int& glc = g.leading();
  int rdeg = f.degree();
  auto top = [&]() -> Int& { return rem[static_cast<size_t>(rdeg)]; };
  while (rdeg >= g.degree()) {
    if (top() == 0) {
      --rdeg;
      continue;
    }
    if (!divisible(top(), glc)) return false;
    Int qc = divexact(top(), glc);
    const int shift = rdeg - g.degree();
    for (int i = 0; i <= g.degree(); ++i) {
      mpz_submul(rem[static_cast<size_t>(i + shift)].get_mpz_t(), qc.get_mpz_t(),
                 g.coeff(i).get_mpz_t());
    }
    quot[static_cast<size_t>(shift)] = std::move(qc);
    --rdeg;
  }
  for (int i = 0; i < g.degree(); ++i)
    if (rem[static_cast<size_t>(i)] != 0) return false;
  if (q) *q = UniPoly(std::move(quot));
  return true;
}

namespace detail {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, computed without
// fractions.
inline UniPoly pseudo_rem(const UniPoly& f, const UniPoly& g) {
  assert(!g.is_zero());
  std::vector<Int> rem(f.coeffs());
  const Int& glc = g.leading();
  int rdeg = f.degree();
  auto deg_of = [&]() {
    while (rdeg >= 0 && rem[static_cast<size_t>(rdeg)] == 0) --rdeg;
  };
  deg_of();
  while (rdeg >= g.degree()) {
    Int lead = rem[static_cast<size_t>(rdeg)];
    for (int i = 0; i <= rdeg; ++i) rem[static_cast<size_t>(i)] *= glc;
    const int shift = rdeg - g.degree();
    for (int i = 0; i <= g.degree(); ++i) {
      mpz_submul(rem[static_cast<size_t>(i + shift)].get_mpz_t(), lead.get_mpz_t(),
                 g.coeff(i).get_mpz_t());
    }
    --rdeg;
    deg_of();
  }
  rem.resize(static_cast<size_t>(rdeg + 1));
  return UniPoly(std::move(rem));
}

}  // namespace detail

// Primitive gcd via the primitive pseudo-remainder sequence. The result is
// primitive with positive leading coefficient (content of the inputs is the
// caller's business); gcd(f, 0) = primitive_part(f), gcd(0, 0) = 0.
inline UniPoly gcd_primitive(UniPoly a, UniPoly b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = detail::pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? UniPoly() : primitive_part(r);
  }
  return a;
}

// Yun's squarefree decomposition of a nonzero polynomial: returns pairwise
// coprime primitive squarefree parts p_i (positive leading coefficient) with
// f = sign * content * prod p_i^i; parts of multiplicity i with deg 0 are
// omitted.
inline std::vector<std::pair<UniPoly, int>> squarefree_parts(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_parts: zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly p = primitive_part(f);
  if (p.degree() < 1) return out;
  UniPoly dp = derivative(p);
  UniPoly a = gcd_primitive(p, dp);
  if (a.degree() == 0) {
    out.emplace_back(std::move(p), 1);
    return out;
  }
  UniPoly b, c;
  bool ok = try_divide_exact(p, a, &b);
  assert(ok);
  ok = try_divide_exact(dp, a, &c);
  assert(ok);
  (void)ok;
  UniPoly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd_primitive(b, d);
    if (g.is_zero()) g = UniPoly{1};
    if (g.degree() > 0) out.emplace_back(g, i);
    UniPoly nb;
    ok = try_divide_exact(b, g, &nb);
    assert(ok);
    UniPoly nc;
    ok = try_divide_exact(d, g, &nc);
    assert(ok);
    b = std::move(nb);
    d = nc - derivative(b);
  }
  return out;
}

}  // namespace littlewood
