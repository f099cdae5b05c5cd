#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qlcm/lcm_engine.hpp"

using namespace qlcm;

namespace {

std::vector<Progression> grid(std::int64_t q_hi, std::int64_t r_hi, std::int64_t u0_hi) {
  std::vector<Progression> out;
  for (std::int64_t q = 1; q <= q_hi; ++q)
    for (std::int64_t r = 1; r <= r_hi; ++r)
      for (std::int64_t u0 = 0; u0 <= u0_hi; ++u0) {
        try {
          out.push_back(make_progression(q, r, u0));
        } catch (const CoprimalityError&) {
        }
      }
  return out;
}

}  // namespace

TEST_CASE("lcm_range") {
  const Progression mersenne = make_progression(2, 1, 0);
  CHECK(oracle::lcm_by_factorization({1, 3, 7, 15}) == 105);
  CHECK(lcm_range(mersenne, 1, 4) == 105);
  CHECK(oracle::lcm_by_factorization({1, 3, 7, 15, 31, 63}) == 9765);
  CHECK(lcm_range(mersenne, 1, 6) == 9765);
  for (std::int64_t n = 1; n <= 10; ++n) CHECK(lcm_range(mersenne, n, n) == term(mersenne, n));
  CHECK_THROWS_AS(lcm_range(mersenne, 0, 3), DomainError);
  CHECK_THROWS_AS(lcm_range(mersenne, 4, 3), DomainError);
}

TEST_CASE("lcm_range agrees with the pairwise Euclid fold") {
  for (const Progression& p : grid(4, 4, 4)) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      std::vector<mpz_class> values;
      for (std::int64_t n = k; n <= 30; ++n) {
        values.push_back(oracle::term(p.q(), p.r(), p.u0(), n));
        REQUIRE(lcm_range(p, k, n) == oracle::lcm_pairwise(values));
      }
    }
  }
}

TEST_CASE("prefix stream") {
  {
    PrefixLcmStream s = prefix_stream(make_progression(2, 1, 0));
    const std::int64_t expected[][3] = {{1, 1, 1}, {2, 3, 3}, {3, 7, 21}, {4, 15, 105}};
    for (const auto& e : expected) {
      const PrefixLcmStep& step = s.next();
      CHECK(step.n == e[0]);
      CHECK(step.term == e[1]);
      CHECK(step.lcm == e[2]);
    }
  }
  {
    PrefixLcmStream s = prefix_stream(make_progression(1, 2, 1));
    const std::int64_t expected[][3] = {{1, 3, 3}, {2, 5, 15}, {3, 7, 105}};
    for (const auto& e : expected) {
      const PrefixLcmStep& step = s.next();
      CHECK(step.n == e[0]);
      CHECK(step.term == e[1]);
      CHECK(step.lcm == e[2]);
    }
  }
  for (const Progression& p : grid(5, 5, 5)) {
    PrefixLcmStream s(p);
    const PrefixLcmStep first = s.next();
    CHECK(first.n == 1);
    CHECK(first.term == term(p, 1));
    CHECK(first.lcm == term(p, 1));
    Integer prev = first.lcm;
    for (std::int64_t n = 2; n <= 40; ++n) {
      const PrefixLcmStep& step = s.next();
      REQUIRE(step.term == term(p, n));
      REQUIRE(step.lcm == lcm_range(p, 1, n));
      REQUIRE(mpz_divisible_p(step.lcm.get_mpz_t(), prev.get_mpz_t()) != 0);
      prev = step.lcm;
    }
  }
}

TEST_CASE("fundamental theorem check") {
  const std::vector<Integer> a{2, 3};
  const std::vector<Integer> b{2, 4};
  const std::vector<Integer> single{17};
  CHECK(fundamental_theorem_check(a).holds);
  CHECK(fundamental_theorem_check(b).holds);
  CHECK(fundamental_theorem_check(single).holds);
  const std::vector<Integer> dup{3, 5, 3};
  CHECK_THROWS_AS(fundamental_theorem_check(dup), DegenerateDifference);
  const std::vector<Integer> zero{3, 0};
  CHECK_THROWS_AS(fundamental_theorem_check(zero), DomainError);
  CHECK_THROWS_AS(fundamental_theorem_check(std::span<const Integer>{}), DomainError);
}

TEST_CASE("fundamental theorem holds on random distinct families") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> size_dist(2, 7);
  std::uniform_int_distribution<int> value_dist(-50, 50);
  std::size_t samples = 0;
  while (samples < 10000) {
    const int m = size_dist(rng);
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < m) {
      const int v = value_dist(rng);
      if (v != 0 && std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    std::vector<Integer> values(picked.begin(), picked.end());
    const Verdict v = fundamental_theorem_check(values);
    INFO(v.detail);
    REQUIRE(v.holds);
    ++samples;
  }
  CHECK(samples == 10000);
}

TEST_CASE("theorem1_check") {
  const Progression p = make_progression(2, 1, 0);
  CHECK(theorem1_check(p, 1, 3).holds);
  CHECK(theorem1_check(p, 3, 4).holds);
  CHECK(lcm_range(p, 3, 4) == 7 * 15);
  for (std::int64_t n = 1; n <= 10; ++n) CHECK(theorem1_check(make_progression(3, 1, 1), n, n).holds);
  CHECK_THROWS_AS(theorem1_check(p, 0, 3), DomainError);
  // Outside the hypotheses the statement can fail: u_n = 3^n.
  CHECK_FALSE(theorem1_check(Progression::unchecked(3, 2, 1), 1, 3).holds);
}

TEST_CASE("theorem1 over a grid, and lcm dominates every C_{n,k}") {
  for (const Progression& p : grid(4, 4, 4)) {
    for (std::int64_t n = 1; n <= 14; ++n) {
      const Integer full = lcm_range(p, 1, n);
      for (std::int64_t k = 1; k <= n; ++k) {
        REQUIRE(theorem1_check(p, k, n).holds);
        REQUIRE(Rational(full) >= cnk(p, n, k).value);
      }
    }
  }
}
