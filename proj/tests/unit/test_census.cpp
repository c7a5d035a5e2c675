#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "littlewood/census.hpp"
#include "littlewood/textio.hpp"
#include "support/oracles.hpp"

using namespace littlewood;

TEST_CASE("omega_size") {
  CHECK(omega_size(2, 2) == 64);
  CHECK(omega_size(1, 1) == 4);
  CHECK(omega_size(3, 1) == 16);
  CHECK(omega_size(1, 1, OmegaVariant::LeadingOddOnly) == 2 * 3);
  CHECK_THROWS_AS(omega_size(0, 1), std::invalid_argument);
}

TEST_CASE("enumeration matches the stated cardinality and is duplicate-free") {
  for (int r = 1; r <= 4; ++r) {
    for (long n = 1; n <= 3; ++n) {
      std::set<std::string> seen;
      uint64_t count = 0;
      enumerate_omega(r, n, [&](const UniPoly& f) {
        ++count;
        seen.insert(to_text(f));
        REQUIRE(f.degree() == r);
        for (int i = 0; i <= r; ++i) {
          REQUIRE(is_odd(f.coeff(i)));
          REQUIRE(abs_int(f.coeff(i)) <= 2 * n - 1);
        }
      });
      CHECK(Int(static_cast<unsigned long>(count)) == omega_size(r, n));
      CHECK(seen.size() == count);
    }
  }
  // r=1, N=1 is exactly {+-1 +- X}
  std::set<std::string> small;
  enumerate_omega(1, 1, [&](const UniPoly& f) { small.insert(to_text(f)); });
  CHECK(small == std::set<std::string>{"-1,-1", "-1,1", "1,-1", "1,1"});
}

TEST_CASE("leading-odd-only variant enumerates its stated family") {
  uint64_t count = 0;
  enumerate_omega(
      2, 2,
      [&](const UniPoly& f) {
        ++count;
        REQUIRE(is_odd(f.leading()));
        REQUIRE(height(f) <= 3);
      },
      CensusOptions{}.budget, OmegaVariant::LeadingOddOnly);
  CHECK(Int(static_cast<unsigned long>(count)) == omega_size(2, 2, OmegaVariant::LeadingOddOnly));
}

TEST_CASE("enumeration budget is a hard error") {
  CHECK_THROWS_AS(enumerate_omega(10, 10, [](const UniPoly&) {}), BudgetExceeded);
  CensusOptions tiny;
  tiny.budget = 5;  // Omega(2,1) has 8 members
  CHECK_THROWS_AS(census_omega(2, 1, tiny), BudgetExceeded);
}

TEST_CASE("omega census ground truth") {
  const CensusReport r21 = census_omega(2, 1);
  CHECK(r21.total == 8);
  CHECK(r21.reducible_count == 0);

  const CensusReport r31 = census_omega(3, 1);
  CHECK(r31.total == 16);
  CHECK(r31.reducible_count == 8);
  CHECK(r31.probability == make_rat(Int(1), Int(2)));

  // Independent oracle: a +-1 cubic is reducible iff it has a root at +-1.
  uint64_t oracle_count = 0;
  enumerate_omega(3, 1, [&](const UniPoly& f) {
    if (evaluate(f, Int(1)) == 0 || evaluate(f, Int(-1)) == 0) ++oracle_count;
  });
  CHECK(oracle_count == 8);

  const CensusReport deg1 = census_omega(1, 3);
  CHECK(deg1.reducible_count == 0);
}

TEST_CASE("census is independent of the worker count") {
  CensusOptions one;
  one.jobs = 1;
  CensusOptions three;
  three.jobs = 3;
  const CensusReport a = census_omega(3, 2, one);
  const CensusReport b = census_omega(3, 2, three);
  CHECK(a.total == b.total);
  CHECK(a.reducible_count == b.reducible_count);
  CHECK(a.probability == b.probability);
}

TEST_CASE("divisor sum") {
  CHECK(divisor_sum(1) == 1);
  CHECK(divisor_sum(2) == 4);
  CHECK(divisor_sum(3) == 7);
  CHECK_THROWS_AS(divisor_sum(0), std::invalid_argument);
}

TEST_CASE("explicit bound report") {
  const BoundReport b32 = explicit_bound(3, 2);
  CHECK(b32.m == 5);
  CHECK(b32.divisor_sum_value == 4);
  CHECK(b32.explicit_count_bound == 640);
  CHECK(b32.probability_bound == make_rat(Int(640), Int(256)));
  CHECK(b32.paper_form_ratio.has_value());

  const BoundReport b21 = explicit_bound(2, 1);
  CHECK(b21.explicit_count_bound == 4);
  CHECK(b21.probability_bound == make_rat(Int(4), Int(8)));
  CHECK_FALSE(b21.paper_form_ratio.has_value());  // log N vanishes at N = 1

  CHECK_THROWS_AS(explicit_bound(1, 1), std::invalid_argument);
}

// Pointwise decrease in N fails at the handful of N where S(N) jumps
// (2N-1 smooth, e.g. N=23), so the exact decay law is asserted on the
// doubling scale instead.
TEST_CASE("probability bound decays in N at r = 10") {
  for (long n = 2; n <= 32; ++n)
    CHECK(explicit_bound(10, 2 * n).probability_bound < explicit_bound(10, n).probability_bound);
  Rat prev;
  bool first = true;
  for (long n : {2L, 4L, 8L, 16L, 32L, 64L}) {
    const Rat cur = explicit_bound(10, n).probability_bound;
    if (!first) CHECK(cur < prev);
    prev = cur;
    first = false;
  }
}

TEST_CASE("count_v examples") {
  // Only candidate (1+X)^2 has height 2, so V is empty.
  CHECK(count_v({Int(1), Int(1), Int(1), Int(1), 1, 1}, 1) == 0);
  CHECK(count_v({Int(1), Int(1), Int(1), Int(1), 1, 1}, 2) == 0);
  CHECK_THROWS_AS(count_v({Int(2), Int(1), Int(1), Int(1), 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_v({Int(3), Int(3), Int(1), Int(1), 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_v({Int(1), Int(1), Int(1), Int(1), 0, 2}, 2), std::invalid_argument);

  // V(1,1,1,1,1,2) in Omega(3,1): X^3+X^2+X+1 and X^3-X^2-X+1.
  CHECK(count_v({Int(1), Int(1), Int(1), Int(1), 1, 2}, 1) == 2);
}

TEST_CASE("count_v sweep agrees with single calls and respects the M bound") {
  for (long n = 1; n <= 2; ++n) {
    for (int r = 2; r <= 3; ++r) {
      const auto sweep = count_v_sweep(r, n);
      const Int m_bound = pow_int(Int(2 * n + 1), static_cast<unsigned long>(r - 2));
      Int covering_sum = 0;
      for (const auto& [key, count] : sweep) {
        CHECK(count <= m_bound);
        covering_sum += count;
      }
      const CensusReport census = census_omega(r, n);
      CHECK(covering_sum >= census.reducible_count);
      // Spot-check sweep entries against direct count_v calls.
      int checked = 0;
      for (const auto& [key, count] : sweep) {
        const auto& [b0, c0, bs, ct, s] = key;
        CHECK(count_v({b0, c0, bs, ct, s, r - s}, n) == count);
        if (++checked >= 3) break;
      }
    }
  }
}

TEST_CASE("box census") {
  const CensusReport r21 = census_box(2, 1);
  CHECK(r21.total == 18);
  CHECK(r21.reducible_count >= 6);
  CHECK(r21.probability >= make_rat(Int(1), Int(3)));
  REQUIRE(r21.box_lower_bound_holds.has_value());
  CHECK(*r21.box_lower_bound_holds);

  const CensusReport r1 = census_box(1, 2);
  CHECK(r1.reducible_count == 0);
  CHECK_FALSE(r1.box_lower_bound_holds.has_value());
}

TEST_CASE("bivariate census at r = 1 and 2") {
  const CensusReport c1 = census_bivariate(1);
  CHECK(c1.total == 16);
  CHECK(c1.reducible_count == 8);
  CHECK(c1.probability == make_rat(Int(1), Int(2)));
  REQUIRE(c1.breakdown.has_value());
  CHECK(c1.breakdown->split == 8);
  CHECK(c1.breakdown->x_specialization_reducible == 0);
  CHECK(c1.breakdown->y_specialization_reducible == 0);
  CHECK(c1.breakdown->reducible_without_prong == 0);

  CensusOptions two;
  two.jobs = 2;
  const CensusReport c2 = census_bivariate(2, two);
  CHECK(c2.total == 512);
  CHECK(c2.probability < c1.probability);
  CHECK(c2.breakdown->reducible_without_prong == 0);
  const CensusReport c2_single = census_bivariate(2);
  CHECK(c2.reducible_count == c2_single.reducible_count);
  CHECK(c2.breakdown->split == c2_single.breakdown->split);

  CHECK_THROWS_AS(census_bivariate(4), BudgetExceeded);
}

TEST_CASE("rank-one sign matrices number 2^(2m-1)") {
  for (int m = 2; m <= 3; ++m) {
    const int bits = m * m;
    uint64_t rank_one = 0;
    for (uint64_t idx = 0; idx < (1ull << bits); ++idx) {
      std::vector<std::vector<int>> mat(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
      for (int b = 0; b < bits; ++b) mat[static_cast<size_t>(b / m)][static_cast<size_t>(b % m)] = (idx >> b) & 1 ? -1 : 1;
      if (oracles::is_rank_one(mat)) ++rank_one;
    }
    CHECK(rank_one == (1ull << (2 * m - 1)));
  }
}
