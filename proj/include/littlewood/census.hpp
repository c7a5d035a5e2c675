// Exhaustive censuses of the polynomial families and exact verification
// data for the counting bounds: the odd-coefficient family Omega(r, N), the
// height box, the +-1 bivariate grid, the divisor sum S(N), and the
// explicit count bound (r-1) M^(r-2) (2 S(N))^2.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "littlewood/certify.hpp"
#include "littlewood/factorize.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Omega(r, N) membership: every coefficient odd with |a_i| <= 2N-1 (the
// reading that gives the family exactly (2N)^(r+1) members). The
// leading-odd-only variant (a_r odd, the rest anywhere in the height box)
// is available for comparison.
enum class OmegaVariant { AllOdd, LeadingOddOnly };

inline const char* to_string(OmegaVariant v) {
  return v == OmegaVariant::AllOdd ? "all-odd" : "leading-odd-only";
}

struct CensusOptions {
  uint64_t budget = 10'000'000;  // hard cap on enumerated family members
  unsigned jobs = 1;
};

struct CensusReport {
  std::string family;
  int r = 0;
  long n_height = 0;
  Int total = 0;
  Int reducible_count = 0;
  Rat probability;
  // Bivariate per-cause tallies over the whole family (flags overlap).
  struct Breakdown {
    Int split = 0;
    Int x_specialization_reducible = 0;
    Int y_specialization_reducible = 0;
    Int reducible_without_prong = 0;
  };
  std::optional<Breakdown> breakdown;
  std::optional<bool> box_lower_bound_holds;  // census_box, r >= 2 only
};

inline Int omega_size(int r, long n, OmegaVariant variant = OmegaVariant::AllOdd) {
  if (r < 1 || n < 1) throw std::invalid_argument("omega_size: need r >= 1, N >= 1");
  if (variant == OmegaVariant::AllOdd)
    return pow_int(Int(2 * n), static_cast<unsigned long>(r) + 1);
  return Int(2 * n) * pow_int(Int(4 * n - 1), static_cast<unsigned long>(r));
}

namespace detail {

// Mixed-radix decoding of family members. Digit order is little-endian in
// the coefficient index; odd values ascend -(2N-1), -(2N-3), ..., 2N-1.
struct OmegaIndexer {
  int r;
  long n;
  OmegaVariant variant;

  uint64_t size_checked(uint64_t budget) const {
    const Int total = omega_size(r, n, variant);
    if (total > Int(static_cast<unsigned long>(budget)))
      throw BudgetExceeded("enumeration budget exceeded: family has " + total.get_str() +
                           " members");
    return static_cast<uint64_t>(total.get_ui());
  }

  void decode(uint64_t idx, UniPoly& scratch) const {
    const long odd_base = 2 * n;
    const long any_base = 4 * n - 1;
    for (int i = 0; i <= r; ++i) {
      long value;
      if (variant == OmegaVariant::AllOdd || i == r) {
        const long d = static_cast<long>(idx % static_cast<uint64_t>(odd_base));
        idx /= static_cast<uint64_t>(odd_base);
        value = -(2 * n - 1) + 2 * d;
      } else {
        const long d = static_cast<long>(idx % static_cast<uint64_t>(any_base));
        idx /= static_cast<uint64_t>(any_base);
        value = d - (2 * n - 1);
      }
      scratch.set_coeff(i, value);
    }
  }
};

// Box family: degree exactly r (a_r != 0), |a_i| <= N.
struct BoxIndexer {
  int r;
  long n;

  Int size() const {
    return Int(2 * n) * pow_int(Int(2 * n + 1), static_cast<unsigned long>(r));
  }

  uint64_t size_checked(uint64_t budget) const {
    const Int total = size();
    if (total > Int(static_cast<unsigned long>(budget)))
      throw BudgetExceeded("enumeration budget exceeded: family has " + total.get_str() +
                           " members");
    return static_cast<uint64_t>(total.get_ui());
  }

  void decode(uint64_t idx, UniPoly& scratch) const {
    const long base = 2 * n + 1;
    for (int i = 0; i < r; ++i) {
      const long d = static_cast<long>(idx % static_cast<uint64_t>(base));
      idx /= static_cast<uint64_t>(base);
      scratch.set_coeff(i, d - n);
    }
    const long d = static_cast<long>(idx % static_cast<uint64_t>(2 * n));
    const long top = d < n ? d - n : d - n + 1;  // skip zero
    scratch.set_coeff(r, top);
  }
};

}  // namespace detail

// Streams every member of Omega(r, N) through fn(const UniPoly&); the
// reference is only valid during the call. Throws BudgetExceeded if the
// family is larger than the budget.
template <class Fn>
void enumerate_omega(int r, long n, Fn&& fn, uint64_t budget = CensusOptions{}.budget,
                     OmegaVariant variant = OmegaVariant::AllOdd) {
  const detail::OmegaIndexer indexer{r, n, variant};
  const uint64_t total = indexer.size_checked(budget);
  UniPoly scratch;
  for (uint64_t idx = 0; idx < total; ++idx) {
    indexer.decode(idx, scratch);
    fn(static_cast<const UniPoly&>(scratch));
  }
}

// Exact reducibility census of Omega(r, N). Partitioned by index range;
// per-range counts merge by addition, so the result is independent of the
// worker count.
inline CensusReport census_omega(int r, long n, const CensusOptions& opts = {},
                                 OmegaVariant variant = OmegaVariant::AllOdd) {
  const detail::OmegaIndexer indexer{r, n, variant};
  const uint64_t total = indexer.size_checked(opts.budget);
  std::vector<uint64_t> counts(std::max(1u, opts.jobs), 0);
  parallel_ranges(total, opts.jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
    UniPoly scratch;
    uint64_t local = 0;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      indexer.decode(idx, scratch);
      if (is_reducible_z(scratch)) ++local;
    }
    counts[worker] = local;
  });
  uint64_t reducible = 0;
  for (uint64_t c : counts) reducible += c;

  CensusReport report;
  report.family = variant == OmegaVariant::AllOdd ? "omega" : "omega-leading-odd";
  report.r = r;
  report.n_height = n;
  report.total = omega_size(r, n, variant);
  report.reducible_count = static_cast<unsigned long>(reducible);
  report.probability = make_rat(report.reducible_count, report.total);
  return report;
}

// Exact reducibility census of the height box (degree exactly r, height at
// most N). For r >= 2 the vanishing-constant-term subfamily is reducible,
// so the probability is at least 1/(2N+1); the report records whether that
// held. Degree-1 polynomials are never reducible, so the bound is not
// asserted there.
inline CensusReport census_box(int r, long n, const CensusOptions& opts = {}) {
  if (r < 1 || n < 1) throw std::invalid_argument("census_box: need r >= 1, N >= 1");
  const detail::BoxIndexer indexer{r, n};
  const uint64_t total = indexer.size_checked(opts.budget);
  std::vector<uint64_t> counts(std::max(1u, opts.jobs), 0);
  parallel_ranges(total, opts.jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
    UniPoly scratch;
    uint64_t local = 0;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      indexer.decode(idx, scratch);
      if (is_reducible_z(scratch)) ++local;
    }
    counts[worker] = local;
  });
  uint64_t reducible = 0;
  for (uint64_t c : counts) reducible += c;

  CensusReport report;
  report.family = "box";
  report.r = r;
  report.n_height = n;
  report.total = indexer.size();
  report.reducible_count = static_cast<unsigned long>(reducible);
  report.probability = make_rat(report.reducible_count, report.total);
  if (r >= 2)
    report.box_lower_bound_holds = report.probability >= make_rat(Int(1), Int(2 * n + 1));
  return report;
}

// Exact census of the +-1 bivariate family of bidegree (r, r) with the
// Kronecker oracle as ground truth, plus the per-cause prong tallies.
inline CensusReport census_bivariate(int r, const CensusOptions& opts = {},
                                     const KroneckerLimits& limits = {}) {
  if (r < 1) throw std::invalid_argument("census_bivariate: need r >= 1");
  const int side = r + 1;
  const int bits = side * side;
  if (bits > 63 || (Int(1) << bits) > Int(static_cast<unsigned long>(opts.budget)))
    throw BudgetExceeded("census_bivariate: 2^" + std::to_string(bits) +
                         " members exceed the enumeration budget");
  const uint64_t total = 1ull << bits;

  struct Local {
    uint64_t reducible = 0, split = 0, xred = 0, yred = 0, bare = 0;
  };
  std::vector<Local> locals(std::max(1u, opts.jobs));
  parallel_ranges(total, opts.jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
    Local acc;
    std::vector<Int> flat(static_cast<size_t>(bits));
    for (uint64_t idx = lo; idx < hi; ++idx) {
      for (int b = 0; b < bits; ++b) flat[static_cast<size_t>(b)] = (idx >> b) & 1 ? -1 : 1;
      const BiPoly f = BiPoly::from_flat(side, side, std::vector<Int>(flat));
      const auto split = product_split(f);
      const bool has_split = split && split->f_x.degree() >= 1 && split->g_y.degree() >= 1;
      const bool xred = is_reducible_z(specialize_x(f, Int(2)));
      const bool yred = is_reducible_z(specialize_y(f, Int(2)));
      const bool reducible = kronecker_reducible(f, limits).reducible;
      acc.split += has_split;
      acc.xred += xred;
      acc.yred += yred;
      acc.reducible += reducible;
      acc.bare += reducible && !has_split && !xred && !yred;
    }
    locals[worker] = acc;
  });
  Local sum;
  for (const Local& l : locals) {
    sum.reducible += l.reducible;
    sum.split += l.split;
    sum.xred += l.xred;
    sum.yred += l.yred;
    sum.bare += l.bare;
  }

  CensusReport report;
  report.family = "bivariate";
  report.r = r;
  report.n_height = 1;
  report.total = Int(1) << bits;
  report.reducible_count = static_cast<unsigned long>(sum.reducible);
  report.probability = make_rat(report.reducible_count, report.total);
  CensusReport::Breakdown breakdown;
  breakdown.split = static_cast<unsigned long>(sum.split);
  breakdown.x_specialization_reducible = static_cast<unsigned long>(sum.xred);
  breakdown.y_specialization_reducible = static_cast<unsigned long>(sum.yred);
  breakdown.reducible_without_prong = static_cast<unsigned long>(sum.bare);
  report.breakdown = breakdown;
  return report;
}

// S(N) = sum over odd b in [1, 2N-1] of floor((2N-1)/b).
inline Int divisor_sum(long n) {
  if (n < 1) throw std::invalid_argument("divisor_sum: need N >= 1");
  Int s = 0;
  const long top = 2 * n - 1;
  for (long b = 1; b <= top; b += 2) s += top / b;
  return s;
}

struct BoundReport {
  int r = 0;
  long n_height = 0;
  Int m = 0;                       // M = 2N + 1
  Int divisor_sum_value = 0;       // S(N)
  Int explicit_count_bound = 0;    // (r-1) M^(r-2) (2 S)^2
  Rat probability_bound;           // over (2N)^(r+1)
  double divisor_sum_ratio = 0;    // 4 S^2 / (M^2 (ln M)^2)
  std::optional<double> paper_form_ratio;  // vs r (ln N)^2 / N * (1 + 1/2N)^r; N >= 2 only
};

// The fully explicit integer bound from the divisor-sum chain. The count
// bound is valid for the reducible members of Omega(r, N); r >= 2 because a
// split needs two positive-degree parts.
inline BoundReport explicit_bound(int r, long n) {
  if (r < 2) throw std::invalid_argument("explicit_bound: need r >= 2");
  if (n < 1) throw std::invalid_argument("explicit_bound: need N >= 1");
  BoundReport report;
  report.r = r;
  report.n_height = n;
  report.m = 2 * n + 1;
  report.divisor_sum_value = divisor_sum(n);
  const Int two_s = 2 * report.divisor_sum_value;
  report.explicit_count_bound =
      Int(r - 1) * pow_int(report.m, static_cast<unsigned long>(r - 2)) * two_s * two_s;
  report.probability_bound = make_rat(report.explicit_count_bound, omega_size(r, n));

  const double s = report.divisor_sum_value.get_d();
  const double m = report.m.get_d();
  report.divisor_sum_ratio = 4.0 * s * s / (m * m * std::log(m) * std::log(m));
  if (n >= 2) {
    const double nn = static_cast<double>(n);
    const double paper_form = r * std::log(nn) * std::log(nn) / nn *
                              std::pow(1.0 + 1.0 / (2.0 * nn), static_cast<double>(r));
    report.paper_form_ratio = report.probability_bound.get_d() / paper_form;
  }
  return report;
}

// Parameters of the V-set: factorizations f = g h with deg g = s,
// deg h = t, g(0) = b0, h(0) = c0, lc(g) = bs, lc(h) = ct.
struct VParams {
  Int b0, c0, bs, ct;
  int s = 0, t = 0;
};

namespace detail {

inline void validate_v_params(const VParams& p, long n) {
  if (p.s < 1 || p.t < 1) throw std::invalid_argument("count_v: need s, t >= 1");
  const Int a0 = p.b0 * p.c0;
  const Int ar = p.bs * p.ct;
  if (!is_odd(a0) || !is_odd(ar))
    throw std::invalid_argument("count_v: parameter parity violation (products must be odd)");
  const Int cap = 2 * n - 1;
  if (abs_int(a0) > cap || abs_int(ar) > cap)
    throw std::invalid_argument("count_v: |b0 c0| and |bs ct| must be <= 2N-1");
}

// All tuples (g(0), h(0), lc(g), lc(h), deg g) over factorizations f = g h
// with both degrees positive, distributed over the irreducible factors,
// content divisors, and signs.
inline std::set<std::tuple<Int, Int, Int, Int, int>> split_tuples(const UniPoly& f) {
  std::set<std::tuple<Int, Int, Int, Int, int>> tuples;
  const FactorizationZ fact = factor_z(f);
  const int r = f.degree();
  const std::vector<Int> divs = detail::divisors_of(fact.content);
  const size_t m = fact.factors.size();
  std::vector<int> take(m, 0);
  // Enumerate sub-multisets of the irreducible factors.
  while (true) {
    int deg_a = 0;
    for (size_t i = 0; i < m; ++i) deg_a += take[i] * fact.factors[i].first.degree();
    if (deg_a >= 1 && deg_a <= r - 1) {
      Int pa0 = 1, palc = 1, pb0 = 1, pblc = 1;
      for (size_t i = 0; i < m; ++i) {
        const auto& [g, mult] = fact.factors[i];
        for (int k = 0; k < take[i]; ++k) {
          pa0 *= g.coeff(0);
          palc *= g.leading();
        }
        for (int k = take[i]; k < mult; ++k) {
          pb0 *= g.coeff(0);
          pblc *= g.leading();
        }
      }
      for (const Int& d : divs) {
        const Int e = divexact(fact.content, d);
        for (int sign = -1; sign <= 1; sign += 2) {
          // g = sign*d*P_A, h = sign*fact.sign*e*P_B; g h = f.
          const Int g0 = sign * d * pa0;
          const Int h0 = Int(sign * fact.sign) * e * pb0;
          const Int glc = sign * d * palc;
          const Int hlc = Int(sign * fact.sign) * e * pblc;
          tuples.emplace(g0, h0, glc, hlc, deg_a);
        }
      }
    }
    // Next exponent vector.
    size_t i = 0;
    while (i < m && take[i] == fact.factors[i].second) {
      take[i] = 0;
      ++i;
    }
    if (i == m) break;
    ++take[i];
  }
  return tuples;
}

}  // namespace detail

// Exact cardinality of V(b0, c0, bs, ct, s, t) inside Omega(s+t, N).
inline Int count_v(const VParams& params, long n, const CensusOptions& opts = {}) {
  detail::validate_v_params(params, n);
  const int r = params.s + params.t;
  Int count = 0;
  const Int a0 = params.b0 * params.c0;
  const Int ar = params.bs * params.ct;
  enumerate_omega(
      r, n,
      [&](const UniPoly& f) {
        if (f.coeff(0) != a0 || f.leading() != ar) return;
        const auto tuples = detail::split_tuples(f);
        if (tuples.count({params.b0, params.c0, params.bs, params.ct, params.s})) ++count;
      },
      opts.budget);
  return count;
}

// One pass over Omega(r, N) collecting every V-set cardinality at once,
// keyed by (b0, c0, bs, ct, s).
inline std::map<std::tuple<Int, Int, Int, Int, int>, Int> count_v_sweep(
    int r, long n, const CensusOptions& opts = {}) {
  std::map<std::tuple<Int, Int, Int, Int, int>, Int> counts;
  enumerate_omega(
      r, n,
      [&](const UniPoly& f) {
        for (const auto& key : detail::split_tuples(f)) counts[key] += 1;
      },
      opts.budget);
  return counts;
}

}  // namespace littlewood
