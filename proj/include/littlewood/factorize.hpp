// Complete factorization of univariate integer polynomials: finite-field
// factorization, quadratic Hensel lifting, and bounded subset recombination
// (Zassenhaus), plus the early-exit reducibility predicate built on it.
//
// Conventions. "Reducible" means over the rationals: a product of two
// positive-degree factors. Integer content and unit signs never count.
// The lifting prime is the smallest p >= 3 with p not dividing lc(f) and
// f squarefree mod p; further primes are scanned only to narrow the set of
// feasible factor degrees, which does not affect results.
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/modpoly.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

// sign * content * prod factor^multiplicity reproduces the input exactly;
// factors are primitive, irreducible over the rationals, with positive
// leading coefficient, in a canonical order.
struct FactorizationZ {
  int sign = 1;
  Int content = 0;
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly product() const {
    UniPoly out{Int(sign) * content};
    for (const auto& [f, mult] : factors) out = out * pow(f, static_cast<unsigned>(mult));
    return out;
  }
};

struct FactorStats {
  uint64_t prime = 0;      // lifting prime for the hardest squarefree part
  int lift_exponent = 0;   // k with factors lifted mod prime^k
};

struct LiftedFactorization {
  uint64_t p = 0;
  int k = 0;
  Int modulus;                   // p^k
  std::vector<UniPoly> factors;  // monic mod p^k, coefficients in [0, p^k)
};

namespace detail {

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint64_t next_prime_after(uint64_t n) {
  uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

// ---- arithmetic on coefficient vectors mod an arbitrary Int modulus ----

using VecZ = std::vector<Int>;

inline void vm_trim(VecZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int vm_deg(const VecZ& a) { return static_cast<int>(a.size()) - 1; }

inline VecZ vm_from_poly(const UniPoly& f, const Int& m) {
  VecZ out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  }
  vm_trim(out);
  return out;
}

inline void vm_reduce(VecZ& a, const Int& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  vm_trim(a);
}

inline VecZ vm_add(const VecZ& a, const VecZ& b, const Int& m) {
  VecZ out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  vm_reduce(out, m);
  return out;
}

inline VecZ vm_sub(const VecZ& a, const VecZ& b, const Int& m) {
  VecZ out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  vm_reduce(out, m);
  return out;
}

inline VecZ vm_mul(const VecZ& a, const VecZ& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  VecZ out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  vm_reduce(out, m);
  return out;
}

// Division with remainder by a monic divisor, coefficients mod m.
inline std::pair<VecZ, VecZ> vm_divmod_monic(const VecZ& a, const VecZ& b, const Int& m) {
  assert(!b.empty() && b.back() == 1);
  VecZ rem = a;
  if (vm_deg(rem) < vm_deg(b)) return {VecZ{}, std::move(rem)};
  VecZ quot(static_cast<size_t>(vm_deg(a) - vm_deg(b)) + 1, Int(0));
  for (int d = vm_deg(rem); d >= vm_deg(b); --d) {
    Int q = rem[static_cast<size_t>(d)];
    if (q == 0) continue;
    const int shift = d - vm_deg(b);
    quot[static_cast<size_t>(shift)] = q;
    for (int i = 0; i <= vm_deg(b); ++i) {
      mpz_submul(rem[static_cast<size_t>(i + shift)].get_mpz_t(), q.get_mpz_t(),
                 b[static_cast<size_t>(i)].get_mpz_t());
    }
    rem[static_cast<size_t>(d)] = 0;
  }
  vm_reduce(rem, m);
  vm_trim(quot);
  return {std::move(quot), std::move(rem)};
}

// Symmetric representative in (-m/2, m/2].
inline Int sym_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline UniPoly vm_to_poly_symmetric(const VecZ& a, const Int& m) {
  std::vector<Int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = sym_mod(a[i], m);
  return UniPoly(std::move(c));
}

inline UniPoly vm_to_poly(const VecZ& a) {
  return UniPoly(std::vector<Int>(a.begin(), a.end()));
}

// ---- quadratic Hensel lifting over a binary factor tree ----

// One Hensel step: given f = g*h (mod m), s*g + t*h = 1 (mod m), h monic,
// deg f = deg g + deg h, deg s < deg h, deg t < deg g, produces the same
// data mod m^2. All vectors are reduced mod m2 = m^2 on return.
struct HenselPair {
  VecZ g, h, s, t;
};

inline void hensel_step(const VecZ& f, HenselPair& node, const Int& m2) {
  VecZ e = vm_sub(f, vm_mul(node.g, node.h, m2), m2);
  auto [q, r] = vm_divmod_monic(vm_mul(node.s, e, m2), node.h, m2);
  VecZ g_new = vm_add(vm_add(node.g, vm_mul(node.t, e, m2), m2), vm_mul(q, node.g, m2), m2);
  VecZ h_new = vm_add(node.h, r, m2);
  VecZ b = vm_sub(vm_add(vm_mul(node.s, g_new, m2), vm_mul(node.t, h_new, m2), m2), VecZ{Int(1)}, m2);
  auto [c, d] = vm_divmod_monic(vm_mul(node.s, b, m2), h_new, m2);
  VecZ s_new = vm_sub(node.s, d, m2);
  VecZ t_new = vm_sub(vm_sub(node.t, vm_mul(node.t, b, m2), m2), vm_mul(c, g_new, m2), m2);
  node.g = std::move(g_new);
  node.h = std::move(h_new);
  node.s = std::move(s_new);
  node.t = std::move(t_new);
}

// Extended Euclid over F_p lifted into VecZ form: returns (s, t) with
// s*a + t*b = 1 mod p, deg s < deg b, deg t < deg a. a, b coprime mod p.
inline std::pair<VecZ, VecZ> bezout_modp(const PolyModP& a, const PolyModP& b) {
  const uint64_t p = a.p;
  PolyModP r0 = a, r1 = b;
  PolyModP s0{p, {1}}, s1{p, {}};
  PolyModP t0{p, {}}, t1{p, {1}};
  while (!r1.is_zero()) {
    auto [q, r] = modp_divmod(r0, r1);
    PolyModP s2 = modp_sub(s0, modp_mul(q, s1));
    PolyModP t2 = modp_sub(t0, modp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::invalid_argument("hensel_lift: factors not coprime mod p");
  const uint64_t inv = modp::inv(r0.leading(), p);
  s0 = modp_scale(s0, inv);
  t0 = modp_scale(t0, inv);
  // Normalize degrees: s = s mod b, and fold the quotient into t.
  auto [q, s_red] = modp_divmod(s0, b);
  t0 = modp_add(t0, modp_mul(q, a));
  auto lift = [](const PolyModP& f) {
    VecZ out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = static_cast<unsigned long>(f.c[i]);
    return out;
  };
  return {lift(s_red), lift(t0)};
}

struct HenselTree {
  struct Node {
    int lo = 0, hi = 0;
    int left = -1, right = -1;
    HenselPair pair;  // only for internal nodes
    VecZ value;       // only for leaves: the lifted factor (index 0 carries lc)
  };
  std::vector<Node> nodes;
  int root = -1;

  int build(int lo, int hi, const std::vector<PolyModP>& adjusted) {
    Node node;
    node.lo = lo;
    node.hi = hi;
    const int idx = static_cast<int>(nodes.size());
    nodes.push_back(node);
    if (hi - lo == 1) {
      nodes[static_cast<size_t>(idx)].value = bezout_lift(adjusted[static_cast<size_t>(lo)]);
      return idx;
    }
    const int mid = lo + (hi - lo) / 2;
    PolyModP gl = adjusted[static_cast<size_t>(lo)];
    for (int i = lo + 1; i < mid; ++i) gl = modp_mul(gl, adjusted[static_cast<size_t>(i)]);
    PolyModP hr = adjusted[static_cast<size_t>(mid)];
    for (int i = mid + 1; i < hi; ++i) hr = modp_mul(hr, adjusted[static_cast<size_t>(i)]);
    auto [s, t] = bezout_modp(gl, hr);
    HenselPair pair;
    pair.g = bezout_lift(gl);
    pair.h = bezout_lift(hr);
    pair.s = std::move(s);
    pair.t = std::move(t);
    const int l = build(lo, mid, adjusted);
    const int r = build(mid, hi, adjusted);
    nodes[static_cast<size_t>(idx)].pair = std::move(pair);
    nodes[static_cast<size_t>(idx)].left = l;
    nodes[static_cast<size_t>(idx)].right = r;
    return idx;
  }

  static VecZ bezout_lift(const PolyModP& f) {
    VecZ out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = static_cast<unsigned long>(f.c[i]);
    return out;
  }

  // Lifts every node from precision m to m^2, given this node's product
  // value mod m^2.
  void lift(int idx, const VecZ& value, const Int& m2) {
    Node& node = nodes[static_cast<size_t>(idx)];
    if (node.left < 0) {
      node.value = value;
      return;
    }
    hensel_step(value, node.pair, m2);
    lift(node.left, node.pair.g, m2);
    lift(node.right, node.pair.h, m2);
  }
};

}  // namespace detail

// Quadratic Hensel lifting. Preconditions (checked): p >= 2, p does not
// divide lc(f), f squarefree mod p, the given factors monic and pairwise
// coprime with lc(f) * prod factors = f (mod p). Returns monic factors
// mod p^k, congruent to the inputs mod p, with lc(f) * prod = f (mod p^k)
// and p^k > 2 * target_bound.
inline LiftedFactorization hensel_lift(const UniPoly& f, uint64_t p,
                                       const std::vector<PolyModP>& factors,
                                       const Int& target_bound) {
  if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("hensel_lift: need deg f >= 1");
  if (p < 2 || !detail::is_prime_u64(p)) throw std::invalid_argument("hensel_lift: p not prime");
  if (factors.empty()) throw std::invalid_argument("hensel_lift: no factors given");
  const Int pz(static_cast<unsigned long>(p));
  if (divisible(f.leading(), pz)) throw std::invalid_argument("hensel_lift: p divides lc(f)");
  PolyModP fp = reduce_mod_p(f, p);
  if (!is_squarefree_modp(fp)) throw std::invalid_argument("hensel_lift: f not squarefree mod p");
  PolyModP prod{p, {static_cast<uint64_t>(mpz_fdiv_ui(f.leading().get_mpz_t(), p))}};
  for (const auto& g : factors) {
    if (g.p != p) throw std::invalid_argument("hensel_lift: factor modulus mismatch");
    if (g.is_zero() || g.leading() != 1)
      throw std::invalid_argument("hensel_lift: factors must be monic");
    prod = modp_mul(prod, g);
  }
  if (!(prod == fp))
    throw std::invalid_argument("hensel_lift: factor product does not match f mod p");

  int k = 1;
  Int pk = pz;
  while (pk <= 2 * target_bound) {
    pk *= pz;
    ++k;
  }

  LiftedFactorization out;
  out.p = p;
  out.k = k;
  out.modulus = pk;

  if (factors.size() == 1) {
    detail::VecZ v = detail::vm_from_poly(f, pk);
    Int inv_lc;
    Int lc = v.back();
    mpz_invert(inv_lc.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    for (auto& c : v) {
      c *= inv_lc;
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    }
    out.factors.push_back(detail::vm_to_poly(v));
    return out;
  }

  // Leaf 0 carries lc(f); the rest stay monic, so every right-hand product
  // in the tree is monic as the Hensel step requires.
  std::vector<PolyModP> adjusted = factors;
  adjusted[0] = modp_scale(adjusted[0], static_cast<uint64_t>(mpz_fdiv_ui(f.leading().get_mpz_t(), p)));

  detail::HenselTree tree;
  tree.root = tree.build(0, static_cast<int>(adjusted.size()), adjusted);

  Int m = pz;
  while (m < pk) {
    Int m2 = m * m;
    tree.lift(tree.root, detail::vm_from_poly(f, m2), m2);
    m = std::move(m2);
  }
  // m = p^(2^d) >= p^k; reduce the leaves to exactly p^k.
  for (auto& node : tree.nodes) {
    if (node.left >= 0) continue;
    detail::VecZ v = node.value;
    detail::vm_reduce(v, pk);
    if (node.lo == 0) {
      Int inv_lc;
      mpz_invert(inv_lc.get_mpz_t(), f.leading().get_mpz_t(), pk.get_mpz_t());
      for (auto& c : v) {
        c *= inv_lc;
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      }
      detail::vm_trim(v);
    }
    node.value = std::move(v);
  }
  out.factors.resize(adjusted.size());
  for (const auto& node : tree.nodes)
    if (node.left < 0) out.factors[static_cast<size_t>(node.lo)] = detail::vm_to_poly(node.value);
  return out;
}

namespace detail {

// ---- prime scanning and factor-degree analysis ----

struct PatternScan {
  uint64_t prime = 0;            // smallest good prime (the lifting prime)
  std::vector<int> pattern;      // factor degrees of f mod prime
  uint64_t feasible = ~0ull;     // bitmask of feasible factor degrees (deg <= 63)
  bool proved_irreducible = false;
};

inline uint64_t pattern_degree_mask(const std::vector<int>& pattern, int n) {
  if (n > 63) return ~0ull;
  uint64_t mask = 1;
  for (int d : pattern) mask |= mask << d;
  return mask;
}

// Scans primes not dividing lc(f) for squarefree reductions. p = 2 only
// sharpens the degree mask (cheap and decisive for odd-coefficient
// families); the recorded lifting prime is the smallest good p >= 3. Stops
// once irreducibility is proved (a one-factor pattern, or no feasible
// proper factor degree survives), after max_good good odd primes, or after
// max_attempts primes total (scan.prime stays 0 if no good odd prime was
// seen — the caller then settles squarefreeness over Z). Pre: degree >= 2.
inline PatternScan scan_primes(const UniPoly& f, int max_good, int max_attempts = 1 << 20) {
  PatternScan scan;
  const int n = f.degree();
  const uint64_t trivial_mask = (n <= 63) ? (1ull | (1ull << n)) : ~0ull;
  if (is_odd(f.leading())) {
    PolyModP f2 = reduce_mod_p(f, 2);
    if (is_squarefree_modp(f2)) {
      std::vector<int> pattern = squarefree_degree_pattern(f2);
      scan.feasible &= pattern_degree_mask(pattern, n);
      if (pattern.size() == 1 || (n <= 63 && (scan.feasible & ~trivial_mask) == 0)) {
        scan.proved_irreducible = true;
        return scan;
      }
    }
  }
  uint64_t p = 2;
  int good = 0;
  for (int attempts = 0; good < max_good && attempts < max_attempts; ++attempts) {
    p = next_prime_after(p);
    if (divisible(f.leading(), Int(static_cast<unsigned long>(p)))) continue;
    PolyModP fp = reduce_mod_p(f, p);
    if (!is_squarefree_modp(fp)) continue;
    ++good;
    if (scan.prime == 0) scan.prime = p;
    std::vector<int> pattern = squarefree_degree_pattern(fp);
    if (scan.pattern.empty()) scan.pattern = pattern;
    scan.feasible &= pattern_degree_mask(pattern, n);
    if (pattern.size() == 1 || (n <= 63 && (scan.feasible & ~trivial_mask) == 0)) {
      scan.proved_irreducible = true;
      return scan;
    }
  }
  return scan;
}

// b^(n-1) * f(X/b): the monic polynomial whose factorizations mirror those
// of f (b = lc(f)).
inline UniPoly monicize(const UniPoly& f) {
  const Int& b = f.leading();
  const int n = f.degree();
  if (b == 1) return f;
  std::vector<Int> c(static_cast<size_t>(n) + 1);
  Int scale = 1;
  for (int i = n; i >= 0; --i) {
    c[static_cast<size_t>(i)] = f.coeff(i) * scale;
    if (i > 0) scale *= b;
  }
  return UniPoly(std::move(c));
}

// Candidate integer factor of f from a monic factor G of monicize(f):
// the primitive part of G(b X).
inline UniPoly pull_back_candidate(const UniPoly& g_monic, const Int& b) {
  std::vector<Int> c(g_monic.coeffs());
  Int scale = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] *= scale;
    scale *= b;
  }
  UniPoly g(std::move(c));
  return primitive_part(g);
}

// Zassenhaus recombination over the lifted factors of the monicized form.
// f: primitive, squarefree, positive lc, degree >= 2, f(0) != 0. When
// stop_at_first_split is set, returns {g, f/g} for the first proper factor
// found (the cofactor is then not necessarily irreducible).
inline std::vector<UniPoly> zassenhaus(const UniPoly& f, const PatternScan& scan,
                                       FactorStats* stats, bool stop_at_first_split) {
  const int n = f.degree();
  const Int& b = f.leading();
  const uint64_t p = scan.prime;
  UniPoly fstar = monicize(f);

  std::vector<std::pair<PolyModP, int>> modular = factor_modp(reduce_mod_p(fstar, p));
  std::vector<PolyModP> parts;
  parts.reserve(modular.size());
  for (auto& [g, mult] : modular) {
    assert(mult == 1);
    parts.push_back(std::move(g));
  }
  if (parts.size() == 1) return {f};

  const Int bound = Int(2) * isqrt_ceil(norm2_squared(fstar)) * pow_int(Int(2), static_cast<unsigned long>(n));
  LiftedFactorization lifted = hensel_lift(fstar, p, parts, bound);
  if (stats) {
    stats->prime = p;
    stats->lift_exponent = lifted.k;
  }
  const Int& P = lifted.modulus;

  const Int tail = fstar.coeff(0);  // nonzero: f(0) != 0 and b != 0
  std::vector<int> live(parts.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

  std::vector<UniPoly> out;
  UniPoly fcur = f;

  // Enumerates size-sz index subsets of live in lexicographic order; returns
  // true when a factor was extracted (live and fcur updated).
  auto try_size = [&](int sz) -> bool {
    const int m = static_cast<int>(live.size());
    std::vector<int> idx(static_cast<size_t>(sz));
    for (int i = 0; i < sz; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      int dsum = 0;
      for (int i = 0; i < sz; ++i)
        dsum += lifted.factors[static_cast<size_t>(live[static_cast<size_t>(idx[static_cast<size_t>(i)])])].degree();
      bool feasible = true;
      if (n <= 63 && !((scan.feasible >> dsum) & 1ull)) feasible = false;
      if (feasible) {
        // Cheap kill: the candidate's constant term must divide fstar(0).
        Int tc = 1;
        for (int i = 0; i < sz; ++i) {
          tc *= lifted.factors[static_cast<size_t>(live[static_cast<size_t>(idx[static_cast<size_t>(i)])])].coeff(0);
          mpz_fdiv_r(tc.get_mpz_t(), tc.get_mpz_t(), P.get_mpz_t());
        }
        tc = sym_mod(tc, P);
        if (tc == 0 || !divisible(tail, tc)) feasible = false;
      }
      if (feasible) {
        VecZ prod{Int(1)};
        for (int i = 0; i < sz; ++i) {
          const UniPoly& gi = lifted.factors[static_cast<size_t>(live[static_cast<size_t>(idx[static_cast<size_t>(i)])])];
          prod = vm_mul(prod, vm_from_poly(gi, P), P);
        }
        UniPoly candidate = pull_back_candidate(vm_to_poly_symmetric(prod, P), b);
        UniPoly quotient;
        if (candidate.degree() >= 1 && candidate.degree() < fcur.degree() &&
            try_divide_exact(fcur, candidate, &quotient)) {
          out.push_back(candidate);
          fcur = std::move(quotient);
          std::vector<int> next_live;
          for (int i = 0, j = 0; i < m; ++i) {
            if (j < sz && idx[static_cast<size_t>(j)] == i) {
              ++j;
              continue;
            }
            next_live.push_back(live[static_cast<size_t>(i)]);
          }
          live = std::move(next_live);
          return true;
        }
      }
      // Advance the combination.
      int i = sz - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == m - sz + i) --i;
      if (i < 0) return false;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < sz; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  };

  for (int sz = 1; 2 * sz <= static_cast<int>(live.size());) {
    if (try_size(sz)) {
      if (stop_at_first_split) {
        out.push_back(fcur);
        return out;
      }
      continue;  // same size again over the reduced list
    }
    ++sz;
  }
  out.push_back(fcur);
  return out;
}

// ---- rational-root helpers ----

// Positive divisors by trial division; callers keep |n| modest.
inline std::vector<Int> divisors_of(const Int& n_in) {
  Int n = abs_int(n_in);
  std::vector<Int> divs;
  if (n == 0) return divs;
  std::vector<std::pair<Int, int>> primes;
  Int d = 2;
  while (d * d <= n) {
    if (divisible(n, d)) {
      int e = 0;
      while (divisible(n, d)) {
        n = divexact(n, d);
        ++e;
      }
      primes.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) primes.emplace_back(n, 1);
  divs.push_back(1);
  for (const auto& [pr, e] : primes) {
    const size_t base = divs.size();
    Int pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= pr;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Exact rational-root existence for deg >= 1, f(0) != 0. Complete; intended
// for polynomials with modest constant and leading coefficients.
inline bool has_rational_root(const UniPoly& f) {
  const int n = f.degree();
  const std::vector<Int> ps = divisors_of(f.coeff(0));
  const std::vector<Int> qs = divisors_of(f.leading());
  std::vector<Int> qpow(static_cast<size_t>(n) + 1);
  for (const Int& q : qs) {
    qpow[0] = 1;
    for (int i = 1; i <= n; ++i) qpow[static_cast<size_t>(i)] = qpow[static_cast<size_t>(i - 1)] * q;
    for (const Int& pa : ps) {
      if (gcd_int(pa, q) != 1) continue;
      for (int s = 0; s < 2; ++s) {
        const Int pv = s ? -pa : pa;
        // sum a_i p^i q^(n-i), Horner in p.
        Int acc = 0;
        for (int i = n; i >= 0; --i) {
          acc *= pv;
          acc += f.coeff(i) * qpow[static_cast<size_t>(n - i)];
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

// Factors a primitive squarefree polynomial with positive leading
// coefficient into irreducibles (no multiplicities).
inline std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f, FactorStats* stats,
                                                        bool stop_at_first_split) {
  const int n = f.degree();
  if (n <= 1) return {f};
  std::vector<UniPoly> out;

  // Peel powers of X.
  UniPoly g = f;
  if (g.coeff(0) == 0) {
    int v = 0;
    while (g.coeff(v) == 0) ++v;
    std::vector<Int> c(g.coeffs().begin() + v, g.coeffs().end());
    g = UniPoly(std::move(c));
    out.emplace_back(UniPoly{0, 1});  // squarefree: v == 1
    if (stop_at_first_split) {
      out.push_back(g);
      return out;
    }
  }
  if (g.degree() == 0) return out;
  if (g.degree() == 1) {
    out.push_back(g);
    return out;
  }
  if (g.degree() == 2) {
    // Reducible over Q iff the discriminant is a perfect square.
    const Int disc = g.coeff(1) * g.coeff(1) - 4 * g.coeff(0) * g.coeff(2);
    if (!is_perfect_square(disc)) {
      out.push_back(g);
      return out;
    }
    const Int s = isqrt_ceil(disc);
    // Roots (-a1 +- s) / (2 a2); rebuild the two primitive linear factors.
    UniPoly lin1(std::vector<Int>{g.coeff(1) - s, 2 * g.coeff(2)});
    lin1 = primitive_part(lin1);
    UniPoly rest;
    const bool ok = try_divide_exact(g, lin1, &rest);
    assert(ok);
    (void)ok;
    out.push_back(lin1);
    out.push_back(rest);
    return out;
  }

  PatternScan scan = scan_primes(g, 8);
  if (scan.proved_irreducible) {
    out.push_back(g);
    return out;
  }
  std::vector<UniPoly> rest = zassenhaus(g, scan, stats, stop_at_first_split);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace detail

// Complete exact factorization over the integers.
inline FactorizationZ factor_z(const UniPoly& f, FactorStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("factor_z: zero polynomial");
  FactorizationZ out;
  out.sign = sign_of(f.leading());
  out.content = content(f);
  if (f.degree() == 0) return out;
  const UniPoly p = primitive_part(f);

  std::vector<std::pair<UniPoly, int>> collected;
  for (const auto& [part, mult] : squarefree_parts(p)) {
    FactorStats part_stats;
    std::vector<UniPoly> irreducibles =
        detail::factor_squarefree_primitive(part, &part_stats, /*stop_at_first_split=*/false);
    for (auto& g : irreducibles) collected.emplace_back(std::move(g), mult);
    if (stats && part_stats.prime != 0) *stats = part_stats;
  }
  std::sort(collected.begin(), collected.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  for (auto& [g, mult] : collected) {
    if (!out.factors.empty() && out.factors.back().first == g)
      out.factors.back().second += mult;
    else
      out.factors.emplace_back(std::move(g), mult);
  }
  return out;
}

// True iff f is a product of two positive-degree rational polynomials
// (content and unit signs do not count). Terminates early on the first
// nontrivial split.
inline bool is_reducible_z(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_reducible_z: need deg f >= 1");
  const int n = f.degree();
  if (n == 1) return false;
  if (f.coeff(0) == 0) return true;  // X divides the primitive part
  if (n == 2) {
    const Int disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0) * f.coeff(2);
    return is_perfect_square(disc);
  }
  if (n == 3) return detail::has_rational_root(f);

  UniPoly p = primitive_part(f);
  // A rational root settles it immediately; small outer coefficients keep
  // the divisor enumeration cheap.
  if (abs_int(p.coeff(0)) <= 1000000 && abs_int(p.leading()) <= 1000000 &&
      detail::has_rational_root(p))
    return true;
  detail::PatternScan scan = detail::scan_primes(p, 8, /*max_attempts=*/30);
  if (scan.proved_irreducible) return false;
  if (scan.prime == 0) {
    // No squarefree reduction among the first primes: settle squarefreeness
    // over Z (a repeated factor means reducible), then rescan unbounded.
    if (gcd_primitive(p, derivative(p)).degree() >= 1) return true;
    scan = detail::scan_primes(p, 8);
    if (scan.proved_irreducible) return false;
  }
  std::vector<UniPoly> split =
      detail::zassenhaus(p, scan, nullptr, /*stop_at_first_split=*/true);
  return split.size() >= 2;
}

}  // namespace littlewood
