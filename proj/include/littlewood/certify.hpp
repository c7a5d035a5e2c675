// Irreducibility certificate for sign-coefficient bivariate polynomials:
// product-split detection, the three-pronged specialization certificate, and
// an exact Kronecker-substitution reducibility oracle for desk-scale inputs.
//
// The certificate direction: if F factors nontrivially, then F(c, Y) is
// reducible, or F(X, c) is reducible, or F = f(X) g(Y). At an even point
// c with |c| >= 2 and all-odd coefficients, each specialized coefficient is
// odd, so specialization preserves degrees and the disjunction is sound.
// All three prongs negative therefore certify irreducibility. A positive
// specialization prong alone proves nothing (the implication is one-way):
// without the oracle the outcome is Unknown.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "littlewood/bipoly.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

struct OracleOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F = f(X) * g(Y), f primitive with positive leading coefficient (content
// and sign live in g). The outer product of the two coefficient vectors
// reproduces F's matrix exactly.
struct SplitWitness {
  UniPoly f_x;
  UniPoly g_y;
};

// A split exists iff the coefficient matrix has rank one (all 2x2 minors
// vanish). Returns the canonical witness, or nullopt. A split is only a
// reducibility witness when both parts are nonconstant; single-row or
// single-column inputs split with a constant part.
inline std::optional<SplitWitness> product_split(const BiPoly& F) {
  if (F.is_zero()) throw std::invalid_argument("product_split: zero polynomial");
  // Pivot column: first column holding a nonzero entry of the first nonzero
  // row. Rank one iff every entry satisfies the pivot cross identity.
  int pi = -1, pj = -1;
  for (int i = 0; i < F.rows() && pi < 0; ++i)
    for (int j = 0; j < F.cols(); ++j)
      if (F.coeff(i, j) != 0) {
        pi = i;
        pj = j;
        break;
      }
  const Int& pivot = F.coeff(pi, pj);
  for (int i = 0; i < F.rows(); ++i)
    for (int j = 0; j < F.cols(); ++j)
      if (F.coeff(i, j) * pivot != F.coeff(i, pj) * F.coeff(pi, j)) return std::nullopt;
  // Column pj is f(X) up to scale; normalize it primitive, positive lc.
  std::vector<Int> col(static_cast<size_t>(F.rows()));
  for (int i = 0; i < F.rows(); ++i) col[static_cast<size_t>(i)] = F.coeff(i, pj);
  UniPoly f = primitive_part(UniPoly(std::move(col)));
  // g determined row-wise through any index where f is nonzero.
  int anchor = 0;
  while (f.coeff(anchor) == 0) ++anchor;
  std::vector<Int> row(static_cast<size_t>(F.cols()));
  for (int j = 0; j < F.cols(); ++j) row[static_cast<size_t>(j)] = divexact(F.coeff(anchor, j), f.coeff(anchor));
  UniPoly g{std::move(row)};
  if (outer_product(f, g) != F)
    throw std::logic_error("product_split: rank-one witness reconstruction failed");
  return SplitWitness{std::move(f), std::move(g)};
}

struct KroneckerLimits {
  int max_cells = 64;              // (dx+1)(dy+1) cap on the coefficient grid
  int max_image_factors = 14;      // irreducible factors of the packed image
  uint64_t max_candidates = 1ull << 20;  // divisor sub-multisets examined
};

struct BivarFactorWitness {
  BiPoly g, h;  // both nonconstant, g * h equals the input exactly
};

struct KroneckerResult {
  bool reducible = false;
  std::optional<BivarFactorWitness> witness;
};

namespace detail {

// Y := X^D packing; injective on supports with deg_X < D.
inline UniPoly kronecker_pack(const BiPoly& F, int D) {
  if (F.is_zero()) return UniPoly();
  std::vector<Int> c(static_cast<size_t>(F.deg_x() + static_cast<long>(F.deg_y()) * D) + 1, Int(0));
  for (int i = 0; i <= F.deg_x(); ++i)
    for (int j = 0; j <= F.deg_y(); ++j) c[static_cast<size_t>(i) + static_cast<size_t>(j) * D] = F.coeff(i, j);
  return UniPoly(std::move(c));
}

// Base-D digit unpacking of exponents.
inline BiPoly kronecker_unpack(const UniPoly& u, int D) {
  if (u.is_zero()) return BiPoly();
  const int rows = D;
  const int cols = u.degree() / D + 1;
  std::vector<Int> a(static_cast<size_t>(rows) * cols, Int(0));
  for (int e = 0; e <= u.degree(); ++e)
    a[static_cast<size_t>(e % D) * cols + (e / D)] = u.coeff(e);
  return BiPoly::from_flat(rows, cols, std::move(a));
}

}  // namespace detail

// Exact bivariate reducibility over the rationals by Kronecker substitution:
// pack with Y := X^(deg_X + 1), factor the image over the integers, and pull
// every divisor sub-multiset back (increasing cardinality, lexicographic
// within a cardinality; first hit wins). Complete because any factorization
// F = G H packs to a sub-multiset split of the image. Throws OracleOverflow
// when the configured limits are exceeded; never returns a wrong answer.
inline KroneckerResult kronecker_reducible(const BiPoly& F, const KroneckerLimits& limits = {}) {
  if (F.is_zero() || F.is_constant())
    throw std::invalid_argument("kronecker_reducible: need a nonconstant polynomial");
  const long cells = static_cast<long>(F.deg_x() + 1) * (F.deg_y() + 1);
  if (cells > limits.max_cells)
    throw OracleOverflow("kronecker oracle: coefficient grid exceeds the configured cell limit");
  const int D = F.deg_x() + 1;
  const UniPoly image = detail::kronecker_pack(F, D);

  const FactorizationZ fact = factor_z(image);
  int total = 0;
  for (const auto& [g, mult] : fact.factors) total += mult;
  if (total > limits.max_image_factors)
    throw OracleOverflow("kronecker oracle: image factor count exceeds the configured limit");
  if (total <= 1) return {};

  const auto& factors = fact.factors;
  const size_t m = factors.size();
  uint64_t examined = 0;

  const Int lead_unit = Int(fact.sign) * fact.content;

  // Enumerate exponent vectors with sum = card, lexicographic, recursively.
  std::vector<int> current(m, 0);
  std::optional<BivarFactorWitness> found;
  auto attempt = [&]() -> bool {
    if (++examined > limits.max_candidates)
      throw OracleOverflow("kronecker oracle: candidate budget exceeded");
    UniPoly side{1};
    UniPoly rest{lead_unit};
    for (size_t i = 0; i < m; ++i) {
      if (current[i] > 0) side = side * pow(factors[i].first, static_cast<unsigned>(current[i]));
      const int remaining = factors[i].second - current[i];
      if (remaining > 0) rest = rest * pow(factors[i].first, static_cast<unsigned>(remaining));
    }
    BiPoly G = detail::kronecker_unpack(side, D);
    BiPoly H = detail::kronecker_unpack(rest, D);
    if (G.is_constant() || H.is_constant()) return false;
    if (G * H != F) return false;
    found = BivarFactorWitness{std::move(G), std::move(H)};
    return true;
  };

  std::function<bool(size_t, int)> rec = [&](size_t idx, int remaining) -> bool {
    if (idx == m) return remaining == 0 && attempt();
    const int cap = std::min(remaining, factors[idx].second);
    for (int take = 0; take <= cap; ++take) {
      current[idx] = take;
      if (rec(idx + 1, remaining - take)) return true;
    }
    current[idx] = 0;
    return false;
  };

  for (int card = 1; 2 * card <= total; ++card) {
    if (rec(0, card)) return {true, std::move(found)};
  }
  return {};
}

enum class CertTag { CertifiedIrreducible, Reducible, Unknown };

inline const char* to_string(CertTag t) {
  switch (t) {
    case CertTag::CertifiedIrreducible: return "CertifiedIrreducible";
    case CertTag::Reducible: return "Reducible";
    case CertTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct Prongs {
  bool x_specialization_reducible = false;
  bool y_specialization_reducible = false;
  bool nonconstant_split = false;
};

struct CertificateOutcome {
  CertTag tag = CertTag::Unknown;
  Prongs prongs;
  std::optional<SplitWitness> split;          // set when the split prong fired
  std::optional<BivarFactorWitness> factors;  // set for oracle-found factorizations
  bool oracle_used = false;
  bool oracle_overflow = false;
  Int evaluation_point = 2;
};

struct CertifyOptions {
  Int evaluation_point = 2;  // any even integer of absolute value >= 2
  bool use_oracle = false;
  bool allow_general = false;  // accept non-sign coefficient grids (weaker certificate)
  KroneckerLimits oracle_limits{};
};

// The three-pronged certificate. For an all-sign grid (every entry +-1,
// both degrees >= 1): all prongs negative => CertifiedIrreducible; a
// nonconstant split => Reducible with witness; otherwise Unknown, unless the
// oracle is enabled, which settles the question exactly. With allow_general
// the prongs are evidence only and CertifiedIrreducible is reported solely
// on the oracle's authority.
inline CertificateOutcome certify_irreducible(const BiPoly& F, const CertifyOptions& opts = {}) {
  const bool sign_grid = all_coeffs_pm_one(F);
  const bool point_valid = !is_odd(opts.evaluation_point) && abs_int(opts.evaluation_point) >= 2;
  if (!opts.allow_general) {
    if (!sign_grid)
      throw std::invalid_argument(
          "certify_irreducible: coefficients are not all +-1 (pass the general-input override)");
    if (!point_valid)
      throw std::invalid_argument("certify_irreducible: evaluation point must be even, |point| >= 2");
  }
  if (F.deg_x() < 1 || F.deg_y() < 1)
    throw std::invalid_argument("certify_irreducible: need positive degree in both variables");

  CertificateOutcome out;
  out.evaluation_point = opts.evaluation_point;

  const std::optional<SplitWitness> split = product_split(F);
  const bool split_nonconstant =
      split && split->f_x.degree() >= 1 && split->g_y.degree() >= 1;
  out.prongs.nonconstant_split = split_nonconstant;
  out.prongs.x_specialization_reducible = is_reducible_z(specialize_x(F, opts.evaluation_point));
  out.prongs.y_specialization_reducible = is_reducible_z(specialize_y(F, opts.evaluation_point));

  if (split_nonconstant) {
    out.tag = CertTag::Reducible;
    out.split = split;
    return out;
  }
  const bool any_prong =
      out.prongs.x_specialization_reducible || out.prongs.y_specialization_reducible;
  if (!any_prong && sign_grid && point_valid) {
    out.tag = CertTag::CertifiedIrreducible;
    return out;
  }

  if (opts.use_oracle) {
    out.oracle_used = true;
    try {
      KroneckerResult oracle = kronecker_reducible(F, opts.oracle_limits);
      if (oracle.reducible) {
        out.tag = CertTag::Reducible;
        out.factors = std::move(oracle.witness);
      } else {
        out.tag = CertTag::CertifiedIrreducible;
      }
      return out;
    } catch (const OracleOverflow&) {
      out.oracle_overflow = true;
    }
  }
  out.tag = CertTag::Unknown;
  return out;
}

}  // namespace littlewood
