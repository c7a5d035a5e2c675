// Polynomial arithmetic and complete factorization over prime fields F_p,
// with machine-word moduli (p < 2^31 so products fit in 64 bits).
//
// The factoring pipeline is the standard one: squarefree decomposition,
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
// (trace method for p = 2). Equal-degree splitting draws from a seeded
// deterministic generator so identical inputs factor identically.
#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/numeric.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

// Residues in [0, p), ascending exponents, top stored coefficient nonzero
// (the zero polynomial stores nothing).
struct PolyModP {
  uint64_t p = 0;
  std::vector<uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
  }
  uint64_t leading() const {
    assert(!c.empty());
    return c.back();
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p == b.p && a.c == b.c; }
};

namespace modp {

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  const uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

inline uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline uint64_t inv(uint64_t a, uint64_t p) {
  // p prime, a != 0 mod p.
  return pow(a % p, p - 2, p);
}

}  // namespace modp

inline void check_same_modulus(const PolyModP& a, const PolyModP& b) {
  if (a.p != b.p) throw std::invalid_argument("modulus mismatch");
}

inline PolyModP reduce_mod_p(const UniPoly& f, uint64_t p) {
  PolyModP out;
  out.p = p;
  out.c.resize(f.coeffs().size());
  for (size_t i = 0; i < f.coeffs().size(); ++i)
    out.c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  out.trim();
  return out;
}

// Lift residues to integers in [0, p).
inline UniPoly lift_to_int(const PolyModP& f) {
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) c[i] = static_cast<unsigned long>(f.c[i]);
  return UniPoly(std::move(c));
}

inline PolyModP modp_x(uint64_t p) { return PolyModP{p, {0, 1}}; }

inline PolyModP modp_add(const PolyModP& a, const PolyModP& b) {
  check_same_modulus(a, b);
  PolyModP out{a.p, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = modp::add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
  out.trim();
  return out;
}

inline PolyModP modp_sub(const PolyModP& a, const PolyModP& b) {
  check_same_modulus(a, b);
  PolyModP out{a.p, {}};
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = modp::sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
  out.trim();
  return out;
}

inline PolyModP modp_scale(const PolyModP& a, uint64_t s) {
  PolyModP out{a.p, a.c};
  s %= a.p;
  for (auto& v : out.c) v = modp::mul(v, s, a.p);
  out.trim();
  return out;
}

inline PolyModP modp_mul(const PolyModP& a, const PolyModP& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return PolyModP{a.p, {}};
  PolyModP out{a.p, std::vector<uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = (out.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  out.trim();
  return out;
}

inline PolyModP modp_monic(const PolyModP& a) {
  if (a.is_zero()) return a;
  return modp_scale(a, modp::inv(a.leading(), a.p));
}

// Division with remainder; divisor nonzero.
inline std::pair<PolyModP, PolyModP> modp_divmod(const PolyModP& a, const PolyModP& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw std::invalid_argument("modp_divmod: division by zero");
  PolyModP rem = a;
  if (a.degree() < b.degree()) return {PolyModP{a.p, {}}, rem};
  const uint64_t inv_lc = modp::inv(b.leading(), a.p);
  PolyModP quot{a.p, std::vector<uint64_t>(static_cast<size_t>(a.degree() - b.degree()) + 1, 0)};
  for (int d = rem.degree(); d >= b.degree(); --d) {
    const uint64_t top = rem.coeff(d);
    if (top == 0) continue;
    const uint64_t q = modp::mul(top, inv_lc, a.p);
    const int shift = d - b.degree();
    quot.c[static_cast<size_t>(shift)] = q;
    for (int i = 0; i <= b.degree(); ++i) {
      auto& r = rem.c[static_cast<size_t>(i + shift)];
      r = modp::sub(r, modp::mul(q, b.coeff(i), a.p), a.p);
    }
  }
  rem.trim();
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

inline PolyModP modp_rem(const PolyModP& a, const PolyModP& b) { return modp_divmod(a, b).second; }

inline PolyModP gcd_modp(PolyModP a, PolyModP b) {
  check_same_modulus(a, b);
  while (!b.is_zero()) {
    PolyModP r = modp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return modp_monic(a);
}

inline PolyModP modp_derivative(const PolyModP& f) {
  PolyModP out{f.p, {}};
  if (f.degree() < 1) return out;
  out.c.resize(static_cast<size_t>(f.degree()), 0);
  for (int i = 1; i <= f.degree(); ++i)
    out.c[static_cast<size_t>(i - 1)] = modp::mul(f.coeff(i), static_cast<uint64_t>(i) % f.p, f.p);
  out.trim();
  return out;
}

inline PolyModP modp_pow_mod(const PolyModP& base, const Int& e, const PolyModP& mod) {
  check_same_modulus(base, mod);
  PolyModP r{mod.p, {1}};
  PolyModP b = modp_rem(base, mod);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = modp_rem(modp_mul(r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = modp_rem(modp_mul(r, b), mod);
  }
  return r;
}

// p-th root over F_p: g(X^p) -> g(X) (Frobenius fixes prime-field scalars).
inline PolyModP modp_pth_root(const PolyModP& f) {
  PolyModP out{f.p, {}};
  if (f.is_zero()) return out;
  out.c.resize(static_cast<size_t>(f.degree() / static_cast<int>(f.p)) + 1, 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.coeff(static_cast<int>(i * f.p));
  out.trim();
  return out;
}

inline bool is_squarefree_modp(const PolyModP& f) {
  if (f.degree() < 1) return true;
  PolyModP d = modp_derivative(f);
  if (d.is_zero()) return false;
  return gcd_modp(f, d).degree() == 0;
}

// Squarefree decomposition of monic f: pairwise coprime monic squarefree
// parts with multiplicities, product of part^mult = f.
inline std::vector<std::pair<PolyModP, int>> modp_squarefree_decomposition(const PolyModP& f) {
  std::vector<std::pair<PolyModP, int>> out;
  if (f.degree() < 1) return out;
  PolyModP g = modp_monic(f);
  PolyModP d = modp_derivative(g);
  if (d.is_zero()) {
    for (auto& [part, mult] : modp_squarefree_decomposition(modp_pth_root(g)))
      out.emplace_back(std::move(part), mult * static_cast<int>(f.p));
    return out;
  }
  PolyModP c = gcd_modp(g, d);
  PolyModP w = modp_divmod(g, c).first;
  int i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd_modp(w, c);
    PolyModP z = modp_divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z, i);
    w = std::move(y);
    c = modp_divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [part, mult] : modp_squarefree_decomposition(modp_pth_root(c)))
      out.emplace_back(std::move(part), mult * static_cast<int>(f.p));
  }
  return out;
}

// Product of the distinct monic irreducible factors of nonzero f.
inline PolyModP squarefree_part_modp(const PolyModP& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part_modp: zero polynomial");
  PolyModP out{f.p, {1}};
  if (f.degree() < 1) return out;
  for (const auto& [part, mult] : modp_squarefree_decomposition(modp_monic(f)))
    out = modp_mul(out, part);
  return modp_monic(out);
}

// Distinct-degree splitting of a monic squarefree f: pairs (product of all
// irreducible factors of degree d, d), ascending in d.
inline std::vector<std::pair<PolyModP, int>> modp_distinct_degree(const PolyModP& f) {
  std::vector<std::pair<PolyModP, int>> out;
  PolyModP rest = modp_monic(f);
  PolyModP h = modp_rem(modp_x(f.p), rest);  // X^(p^d) mod rest, d = 0 so far
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = modp_pow_mod(h, Int(static_cast<unsigned long>(f.p)), rest);
    PolyModP g = gcd_modp(modp_sub(h, modp_x(f.p)), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = modp_divmod(rest, g).first;
      h = modp_rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

namespace detail {

inline PolyModP random_poly_modp(uint64_t p, int max_deg, Xoshiro256& rng) {
  PolyModP out{p, std::vector<uint64_t>(static_cast<size_t>(max_deg) + 1, 0)};
  for (auto& v : out.c) v = rng.below(p);
  out.trim();
  return out;
}

// Equal-degree splitting: f is monic squarefree, every irreducible factor
// has degree d. Appends the irreducible factors to out.
inline void modp_equal_degree(const PolyModP& f, int d, Xoshiro256& rng,
                              std::vector<PolyModP>& out) {
  if (f.degree() == d) {
    out.push_back(modp_monic(f));
    return;
  }
  const uint64_t p = f.p;
  PolyModP splitter;
  while (true) {
    PolyModP a = random_poly_modp(p, f.degree() - 1, rng);
    if (a.degree() < 1) continue;
    PolyModP b;
    if (p == 2) {
      // Trace map over F_{2^d}: a + a^2 + a^4 + ... (d terms).
      PolyModP t = a;
      PolyModP u = a;
      for (int i = 1; i < d; ++i) {
        u = modp_rem(modp_mul(u, u), f);
        t = modp_add(t, u);
      }
      b = t;
    } else {
      Int e = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
      b = modp_sub(modp_pow_mod(a, e, f), PolyModP{p, {1}});
    }
    PolyModP g = gcd_modp(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      splitter = std::move(g);
      break;
    }
  }
  modp_equal_degree(splitter, d, rng, out);
  modp_equal_degree(modp_divmod(f, splitter).first, d, rng, out);
}

}  // namespace detail

// Complete factorization over F_p: monic irreducible factors with
// multiplicities (f = lc * prod factor^mult). Deterministic: the equal-degree
// stage draws from a fixed-seed generator.
inline std::vector<std::pair<PolyModP, int>> factor_modp(const PolyModP& f,
                                                         uint64_t seed = 0x4c495454u) {
  if (f.degree() < 1) throw std::invalid_argument("factor_modp: constant input");
  Xoshiro256 rng = derive_stream(seed, f.p);
  std::vector<std::pair<PolyModP, int>> out;
  for (const auto& [part, mult] : modp_squarefree_decomposition(modp_monic(f))) {
    for (const auto& [block, d] : modp_distinct_degree(part)) {
      std::vector<PolyModP> irreducibles;
      detail::modp_equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

// Degrees (with multiplicity) of the irreducible factors of f mod p, the
// cheap pattern used for degree analysis: no equal-degree splitting needed.
inline std::vector<int> factor_degree_pattern(const PolyModP& f) {
  std::vector<int> degrees;
  for (const auto& [part, mult] : modp_squarefree_decomposition(modp_monic(f))) {
    for (const auto& [block, d] : modp_distinct_degree(part)) {
      const int count = block.degree() / d;
      for (int i = 0; i < count * mult; ++i) degrees.push_back(d);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

// Same, for f already known squarefree mod p (skips the decomposition).
inline std::vector<int> squarefree_degree_pattern(const PolyModP& f) {
  std::vector<int> degrees;
  for (const auto& [block, d] : modp_distinct_degree(modp_monic(f))) {
    const int count = block.degree() / d;
    for (int i = 0; i < count; ++i) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace littlewood
