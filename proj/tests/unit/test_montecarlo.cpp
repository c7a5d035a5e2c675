#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "littlewood/census.hpp"
#include "littlewood/montecarlo.hpp"
#include "littlewood/textio.hpp"

using namespace littlewood;

TEST_CASE("wilson interval") {
  const auto [lo0, hi0] = wilson_interval(0, 10, 0.95);
  CHECK(lo0 == 0.0);
  CHECK(std::abs(hi0 - 0.278) <= 0.005);  // closed form gives 0.2775328

  const auto [lon, hin] = wilson_interval(10, 10, 0.95);
  CHECK(hin == 1.0);
  CHECK(lon > 0.5);

  double prev_width = 1.0;
  for (uint64_t n : {10ull, 100ull, 1000ull}) {
    const auto [lo, hi] = wilson_interval(n / 2, n, 0.95);
    CHECK(lo <= 0.5);
    CHECK(0.5 <= hi);
    CHECK(hi - lo < prev_width);
    prev_width = hi - lo;
  }

  CHECK_THROWS_AS(wilson_interval(1, 0, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(5, 4, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(1, 4, 1.0), std::invalid_argument);
}

TEST_CASE("inverse normal quantiles") {
  CHECK(std::abs(inverse_normal_cdf(0.975) - 1.9599639845) < 1e-8);
  CHECK(std::abs(inverse_normal_cdf(0.995) - 2.5758293035) < 1e-8);
  CHECK(std::abs(inverse_normal_cdf(0.5)) < 1e-12);
  CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::invalid_argument);
}

TEST_CASE("golden sample: master 0, stream 0, r = 1") {
  Xoshiro256 stream = derive_stream(0, 0);
  const BiPoly f = sample_sign_bipoly(1, stream);
  CHECK(to_text(f) == "1,-1;-1,1");
  // Re-deriving the stream reproduces it bit-exactly.
  Xoshiro256 again = derive_stream(0, 0);
  CHECK(sample_sign_bipoly(1, again) == f);
}

TEST_CASE("entry mean over 10^4 samples at r = 4 sits within 4 standard errors") {
  long sum = 0;
  long entries = 0;
  for (uint64_t k = 0; k < 10000; ++k) {
    Xoshiro256 stream = derive_stream(7, k);
    const BiPoly f = sample_sign_bipoly(4, stream);
    for (const auto& v : f.flat()) {
      sum += static_cast<long>(v.get_si());
      ++entries;
    }
  }
  const double mean = static_cast<double>(sum) / static_cast<double>(entries);
  const double se = 1.0 / std::sqrt(static_cast<double>(entries));
  CHECK(std::abs(mean) <= 4 * se);
}

TEST_CASE("distinct streams give distinct matrices") {
  for (uint64_t k = 0; k < 100; ++k) {
    Xoshiro256 a = derive_stream(99, 2 * k);
    Xoshiro256 b = derive_stream(99, 2 * k + 1);
    CHECK(sample_sign_bipoly(3, a) != sample_sign_bipoly(3, b));
  }
}

TEST_CASE("monte carlo at r = 1 brackets the exact census probability") {
  const EstimateReport rep = run_monte_carlo(1, 100, 42);
  CHECK(rep.trials == 100);
  CHECK(rep.tallies.total() == 100);
  CHECK(rep.tallies.unknown == 0);  // degree-1 specializations never fire a prong
  CHECK(rep.p_hat == make_rat(Int(52), Int(100)));
  CHECK(rep.wilson_low <= 0.5);
  CHECK(0.5 <= rep.wilson_high);
  CHECK(rep.manifest.master_seed == 42);
  CHECK(rep.manifest.rng == std::string(kRngName));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(run_monte_carlo(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_monte_carlo(0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(trend_experiment({}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(trend_experiment({3, 2}, 10, 1), std::invalid_argument);
}

TEST_CASE("determinism across worker counts") {
  MonteCarloOptions one;
  one.jobs = 1;
  MonteCarloOptions three;
  three.jobs = 3;
  const EstimateReport a = run_monte_carlo(3, 400, 2024, one);
  const EstimateReport b = run_monte_carlo(3, 400, 2024, three);
  CHECK(a.tallies.certified_irreducible == b.tallies.certified_irreducible);
  CHECK(a.tallies.reducible == b.tallies.reducible);
  CHECK(a.tallies.unknown == b.tallies.unknown);
  CHECK(a.tallies.split == b.tallies.split);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.wilson_low == b.wilson_low);
  CHECK(a.wilson_high == b.wilson_high);
}

TEST_CASE("exhaustive classification matches the census") {
  for (int r = 1; r <= 2; ++r) {
    MonteCarloOptions opts;
    opts.use_oracle = true;
    opts.jobs = 2;
    const OutcomeTallies tallies = exhaustive_certify_tally(r, opts);
    const CensusReport census = census_bivariate(r);
    CHECK(Int(static_cast<unsigned long>(tallies.reducible)) == census.reducible_count);
    CHECK(tallies.unknown == 0);
    CHECK(tallies.oracle_overflow == 0);
    CHECK(Int(static_cast<unsigned long>(tallies.split)) == census.breakdown->split);
    CHECK(Int(static_cast<unsigned long>(tallies.x_specialization_reducible)) ==
          census.breakdown->x_specialization_reducible);
    CHECK(tallies.total() == static_cast<uint64_t>(census.total.get_ui()));
  }
}

TEST_CASE("wilson coverage of the exact probability at r = 2") {
  // True reducible probability from the exhaustive census; every sample
  // outcome at r = 2 is settled without the oracle (split or certified), so
  // p_hat estimates the true probability directly.
  const CensusReport census = census_bivariate(2);
  const double truth = census.probability.get_d();
  int covered = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const EstimateReport rep = run_monte_carlo(2, 300, seed, {.confidence = 0.99});
    if (rep.wilson_low <= truth && truth <= rep.wilson_high) ++covered;
  }
  CHECK(covered >= 95);
}

TEST_CASE("category tallies track the census breakdown (chi-square at 1% significance)") {
  const CensusReport census = census_bivariate(1);
  const double p_split = census.breakdown->split.get_d() / census.total.get_d();
  const EstimateReport rep = run_monte_carlo(1, 10000, 31337);
  const double expected = 10000 * p_split;
  const double observed = static_cast<double>(rep.tallies.split);
  const double chi2 = (observed - expected) * (observed - expected) / expected +
                      (observed - expected) * (observed - expected) / (10000 - expected);
  CHECK(chi2 < 6.635);  // chi-square critical value, 1 df, alpha = 0.01
}

TEST_CASE("trend rows use disjoint streams and keep the shared seed") {
  const auto reports = trend_experiment({1, 2, 3}, 50, 777);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].manifest.stream_base == 0);
  CHECK(reports[1].manifest.stream_base == 50);
  CHECK(reports[2].manifest.stream_base == 100);
  for (const auto& rep : reports) {
    CHECK(rep.manifest.master_seed == 777);
    CHECK(rep.tallies.total() == 50);
  }
}

TEST_CASE("exhaustive trend cross-check against census at r = 1..2") {
  // Classifying the whole family with the oracle reproduces the census
  // probabilities exactly; sampling converges to the same numbers.
  for (int r = 1; r <= 2; ++r) {
    MonteCarloOptions opts;
    opts.use_oracle = true;
    const OutcomeTallies all = exhaustive_certify_tally(r, opts);
    const CensusReport census = census_bivariate(r);
    const Rat exact = make_rat(Int(static_cast<unsigned long>(all.reducible)),
                               Int(static_cast<unsigned long>(all.total())));
    CHECK(exact == census.probability);
  }
}
