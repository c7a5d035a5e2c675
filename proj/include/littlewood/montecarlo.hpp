// Seeded Monte Carlo estimation of the certificate outcome distribution for
// random sign-coefficient bivariate polynomials, with Wilson confidence
// intervals and a reproducibility manifest. Trial k of master seed m always
// draws from derive_stream(m, stream_base + k), so reports are bit-identical
// at any worker count.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "littlewood/bipoly.hpp"
#include "littlewood/certify.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/parallel.hpp"
#include "littlewood/rng.hpp"
#include "littlewood/version.hpp"

namespace littlewood {

// Inverse standard normal CDF: Acklam's rational approximation polished by
// one Halley step through erfc.
inline double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log(1 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2 * M_PI) * std::exp(x * x / 2);
  return x - u / (1 + x * u / 2);
}

// Wilson score interval for k successes out of n, clamped to [0, 1].
inline std::pair<double, double> wilson_interval(uint64_t k, uint64_t n, double confidence) {
  if (n < 1) throw std::invalid_argument("wilson_interval: need n >= 1");
  if (k > n) throw std::invalid_argument("wilson_interval: need k <= n");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("wilson_interval: confidence in (0,1)");
  const double z = inverse_normal_cdf(0.5 + confidence / 2);
  const double nn = static_cast<double>(n);
  const double phat = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (phat + z2 / (2 * nn)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
  double low = (k == 0) ? 0.0 : std::max(0.0, center - half);
  double high = (k == n) ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

// One random sign matrix of side r+1; entry (i, j) consumes generator
// output i*(r+1)+j (row-major), one output per entry.
inline BiPoly sample_sign_bipoly(int r, Xoshiro256& stream) {
  if (r < 1) throw std::invalid_argument("sample_sign_bipoly: need r >= 1");
  const int side = r + 1;
  std::vector<Int> a(static_cast<size_t>(side) * side);
  for (auto& v : a) v = stream.next_sign();
  return BiPoly::from_flat(side, side, std::move(a));
}

struct OutcomeTallies {
  uint64_t certified_irreducible = 0;
  uint64_t reducible = 0;
  uint64_t unknown = 0;          // prong fired, no oracle verdict
  uint64_t oracle_overflow = 0;  // oracle requested but over its limits
  uint64_t split = 0;
  uint64_t x_specialization_reducible = 0;
  uint64_t y_specialization_reducible = 0;

  uint64_t total() const { return certified_irreducible + reducible + unknown + oracle_overflow; }

  OutcomeTallies& operator+=(const OutcomeTallies& o) {
    certified_irreducible += o.certified_irreducible;
    reducible += o.reducible;
    unknown += o.unknown;
    oracle_overflow += o.oracle_overflow;
    split += o.split;
    x_specialization_reducible += o.x_specialization_reducible;
    y_specialization_reducible += o.y_specialization_reducible;
    return *this;
  }

  void record(const CertificateOutcome& outcome) {
    switch (outcome.tag) {
      case CertTag::CertifiedIrreducible: ++certified_irreducible; break;
      case CertTag::Reducible: ++reducible; break;
      case CertTag::Unknown: outcome.oracle_overflow ? ++oracle_overflow : ++unknown; break;
    }
    split += outcome.prongs.nonconstant_split;
    x_specialization_reducible += outcome.prongs.x_specialization_reducible;
    y_specialization_reducible += outcome.prongs.y_specialization_reducible;
  }
};

struct EstimateManifest {
  uint64_t master_seed = 0;
  uint64_t stream_base = 0;
  Int evaluation_point = 2;
  bool use_oracle = false;
  double confidence = 0.95;
  std::string rng = kRngName;
  std::string version = kVersion;
};

// The headline estimate p_hat is the fraction NOT certified irreducible: an
// upper bound on the true reducible probability under the one-directional
// certificate (exact when the oracle settles every sample).
struct EstimateReport {
  int r = 0;
  uint64_t trials = 0;
  OutcomeTallies tallies;
  Rat p_hat;
  double wilson_low = 0, wilson_high = 0;
  EstimateManifest manifest;
};

struct MonteCarloOptions {
  bool use_oracle = false;
  double confidence = 0.95;
  unsigned jobs = 1;
  Int evaluation_point = 2;
  KroneckerLimits oracle_limits{};
  uint64_t stream_base = 0;
};

inline EstimateReport run_monte_carlo(int r, uint64_t trials, uint64_t master_seed,
                                      const MonteCarloOptions& opts = {}) {
  if (r < 1) throw std::invalid_argument("run_monte_carlo: need r >= 1");
  if (trials < 1) throw std::invalid_argument("run_monte_carlo: need at least one trial");
  CertifyOptions cert;
  cert.evaluation_point = opts.evaluation_point;
  cert.use_oracle = opts.use_oracle;
  cert.oracle_limits = opts.oracle_limits;

  std::vector<OutcomeTallies> locals(std::max(1u, opts.jobs));
  parallel_ranges(trials, opts.jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
    OutcomeTallies acc;
    for (uint64_t k = lo; k < hi; ++k) {
      Xoshiro256 stream = derive_stream(master_seed, opts.stream_base + k);
      const BiPoly f = sample_sign_bipoly(r, stream);
      acc.record(certify_irreducible(f, cert));
    }
    locals[worker] = acc;
  });
  OutcomeTallies tallies;
  for (const auto& l : locals) tallies += l;

  EstimateReport report;
  report.r = r;
  report.trials = trials;
  report.tallies = tallies;
  const uint64_t uncertified = trials - tallies.certified_irreducible;
  report.p_hat = make_rat(Int(static_cast<unsigned long>(uncertified)),
                          Int(static_cast<unsigned long>(trials)));
  const auto [low, high] = wilson_interval(uncertified, trials, opts.confidence);
  report.wilson_low = low;
  report.wilson_high = high;
  report.manifest.master_seed = master_seed;
  report.manifest.stream_base = opts.stream_base;
  report.manifest.evaluation_point = opts.evaluation_point;
  report.manifest.use_oracle = opts.use_oracle;
  report.manifest.confidence = opts.confidence;
  return report;
}

// One report per r, shared master seed, disjoint stream ranges (row i uses
// stream_base = i * trials).
inline std::vector<EstimateReport> trend_experiment(const std::vector<int>& r_list,
                                                    uint64_t trials, uint64_t master_seed,
                                                    const MonteCarloOptions& opts = {}) {
  if (r_list.empty()) throw std::invalid_argument("trend_experiment: empty r list");
  for (size_t i = 1; i < r_list.size(); ++i)
    if (r_list[i] <= r_list[i - 1])
      throw std::invalid_argument("trend_experiment: r list must be strictly ascending");
  std::vector<EstimateReport> out;
  out.reserve(r_list.size());
  for (size_t i = 0; i < r_list.size(); ++i) {
    MonteCarloOptions row = opts;
    row.stream_base = opts.stream_base + i * trials;
    out.push_back(run_monte_carlo(r_list[i], trials, master_seed, row));
  }
  return out;
}

// Exhaustive classification of the whole side-(r+1) sign family with the
// same certify pipeline; cross-checks the sampler against census truth.
inline OutcomeTallies exhaustive_certify_tally(int r, const MonteCarloOptions& opts = {}) {
  const int side = r + 1;
  const int bits = side * side;
  if (bits > 25) throw std::invalid_argument("exhaustive_certify_tally: family too large");
  CertifyOptions cert;
  cert.evaluation_point = opts.evaluation_point;
  cert.use_oracle = opts.use_oracle;
  cert.oracle_limits = opts.oracle_limits;
  const uint64_t total = 1ull << bits;
  std::vector<OutcomeTallies> locals(std::max(1u, opts.jobs));
  parallel_ranges(total, opts.jobs, [&](unsigned worker, uint64_t lo, uint64_t hi) {
    OutcomeTallies acc;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      std::vector<Int> flat(static_cast<size_t>(bits));
      for (int b = 0; b < bits; ++b) flat[static_cast<size_t>(b)] = (idx >> b) & 1 ? -1 : 1;
      const BiPoly f = BiPoly::from_flat(side, side, std::move(flat));
      acc.record(certify_irreducible(f, cert));
    }
    locals[worker] = acc;
  });
  OutcomeTallies tallies;
  for (const auto& l : locals) tallies += l;
  return tallies;
}

}  // namespace littlewood
