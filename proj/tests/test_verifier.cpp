#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qlcm/lcm_engine.hpp"
#include "qlcm/verifier.hpp"

using namespace qlcm;

namespace {

// Brute-force C_{n,k} as a reduced fraction, from oracle terms and q-integers.
mpq_class oracle_cnk(std::int64_t q, std::int64_t r, std::int64_t u0, std::int64_t n, std::int64_t k) {
  mpz_class num = 1, den = 1;
  for (std::int64_t i = k; i <= n; ++i) num *= oracle::term(q, r, u0, i);
  for (std::int64_t i = 1; i <= n - k; ++i) den *= oracle::q_int(i, q);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

std::vector<Progression> valid_q2_grid(std::int64_t hi) {
  std::vector<Progression> out;
  for (std::int64_t q = 2; q <= hi; ++q)
    for (std::int64_t r = 1; r <= hi; ++r)
      for (std::int64_t u0 = 0; u0 <= hi; ++u0) {
        try {
          out.push_back(make_progression(q, r, u0));
        } catch (const CoprimalityError&) {
        }
      }
  return out;
}

SweepGrid small_grid(std::int64_t n_max) {
  SweepGrid g;
  g.q = {1, 4};
  g.r = {1, 4};
  g.u0 = {0, 4};
  g.n_max = n_max;
  return g;
}

}  // namespace

TEST_CASE("check_identities") {
  CHECK(check_identities(make_progression(2, 1, 0), 5));
  CHECK(check_identities(make_progression(3, 1, 1), 3));
  CHECK(check_identities(make_progression(1, 2, 1), 12));
  CHECK(check_identities(make_progression(2, 1, 0), 1));
  CHECK_THROWS_AS(check_identities(make_progression(2, 1, 0), 0), DomainError);
  // u_n = 3^n: gcd(u_n, q) != 1 for every n >= 1.
  CHECK_FALSE(check_identities(Progression::unchecked(3, 2, 1), 4));
}

TEST_CASE("check_unimodality") {
  const Progression m = make_progression(2, 1, 0);
  CHECK(cnk(m, 4, 2).value == 105);
  CHECK(cnk(m, 4, 3).value == 105);
  CHECK(l_index(m, 4) == 3);
  CHECK(check_unimodality(m, 4));
  CHECK(check_unimodality(m, 1));
  CHECK(check_unimodality(make_progression(3, 1, 1), 6));
  CHECK_THROWS_AS(check_unimodality(make_progression(1, 1, 0), 4), UnsupportedBase);
}

TEST_CASE("l_index is the largest maximiser of the brute-force C_{n,k}") {
  for (const Progression& p : valid_q2_grid(4)) {
    for (std::int64_t n = 1; n <= 14; ++n) {
      std::int64_t best = 1;
      mpq_class best_value = oracle_cnk(p.q(), p.r(), p.u0(), n, 1);
      for (std::int64_t k = 2; k <= n; ++k) {
        const mpq_class v = oracle_cnk(p.q(), p.r(), p.u0(), n, k);
        if (v >= best_value) {
          best_value = v;
          best = k;
        }
      }
      INFO("q=" << p.q() << " r=" << p.r() << " u0=" << p.u0() << " n=" << n);
      REQUIRE(l_index(p, n) == best);
      REQUIRE(cnk(p, n, best).value == best_value);
    }
  }
}

TEST_CASE("check_index_monotonicity") {
  const Progression m = make_progression(2, 1, 0);
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(k_index(m, n) == n / 2 + 1);
  CHECK(check_index_monotonicity(m, 40));
  CHECK(check_index_monotonicity(m, 1));
  CHECK(check_index_monotonicity(make_progression(3, 1, 1), 50));
}

TEST_CASE("check_step_ratio") {
  const Progression m = make_progression(2, 1, 0);
  CHECK(l_index(m, 3) == 2);
  CHECK(cnk(m, 3, 2).value == 21);
  CHECK(check_step_ratio(m, 4));
  CHECK(check_step_ratio(m, 2));
  CHECK(check_step_ratio(m, 1));
}

TEST_CASE("check_chain_bound") {
  const Progression m = make_progression(2, 1, 0);
  CHECK(check_chain_bound(m, 4));
  CHECK(check_chain_bound(m, 1));
  const Progression plus = make_progression(2, 1, 2);
  CHECK(lcm_range(plus, 1, 5) == 8415);
  CHECK(check_chain_bound(plus, 5));
}

TEST_CASE("check_ell_lower_bounds") {
  CHECK(l_index(make_progression(2, 1, 0), 5) == 3);
  CHECK(check_ell_lower_bounds(make_progression(2, 1, 0), 5));
  CHECK(check_ell_lower_bounds(make_progression(3, 1, 1), 1));
}

TEST_CASE("every suite passes on the small q >= 2 grid") {
  for (const Progression& p : valid_q2_grid(4)) {
    INFO("q=" << p.q() << " r=" << p.r() << " u0=" << p.u0());
    for (Suite s : kAllSuites) {
      const Verdict v = run_suite(s, p, 14);
      INFO(to_string(s) << ": " << v.detail);
      REQUIRE(v.holds);
    }
  }
}

TEST_CASE("suite names round-trip") {
  for (Suite s : kAllSuites) CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("nope").has_value());
}

TEST_CASE("run_sweep examples") {
  SweepGrid g;
  g.q = {2, 2};
  g.r = {1, 1};
  g.u0 = {0, 0};
  g.n_max = 10;
  const SweepResult mersenne = run_sweep(g, {});
  CHECK(mersenne.records.size() == 10);
  CHECK(mersenne.summary.failures == 0);
  CHECK(mersenne.summary.checked == 1);
  CHECK(mersenne.records[3].lcm_bits == 7);
  CHECK(mersenne.records[3].k_n == 3);
  CHECK(mersenne.records[3].ell_n == 3);
  CHECK(mersenne.records[3].verdicts.at(BoundKind::Theorem2));
  CHECK(mersenne.records[3].verdicts.count(BoundKind::HongFeng) == 0);

  SweepGrid bad;
  bad.q = {2, 2};
  bad.r = {2, 2};
  bad.u0 = {2, 2};
  bad.n_max = 5;
  const SweepResult none = run_sweep(bad, {});
  CHECK(none.records.empty());
  CHECK(none.summary.skipped_gcd == 1);
  CHECK(none.summary.checked == 0);
  CHECK(none.summary.failures == 0);

  const SweepResult grid = run_sweep(small_grid(15), {});
  CHECK(grid.summary.failures == 0);
  CHECK_FALSE(grid.summary.first_failure.has_value());
  CHECK(grid.records.size() == grid.summary.checked * 15);
}

TEST_CASE("q = 1 points skip the threshold suites") {
  SweepGrid g;
  g.q = {1, 1};
  g.r = {2, 2};
  g.u0 = {1, 1};
  g.n_max = 8;
  const SweepResult res = run_sweep(g, {});
  CHECK(res.summary.failures == 0);
  CHECK(res.summary.suites.at(Suite::Unimodality).skipped == 1);
  CHECK(res.summary.suites.at(Suite::Theorem1).passed == 1);
  CHECK_FALSE(res.records.front().k_n.has_value());
  CHECK(res.records.front().verdicts.at(BoundKind::HongFeng));
}

TEST_CASE("parallel sweep equals the serial reference") {
  const SweepGrid g = small_grid(12);
  const SweepResult serial = run_sweep_serial(g, {});
  for (int jobs : {1, 2, 8}) {
    SweepOptions o;
    o.jobs = jobs;
    const SweepResult par = run_sweep(g, o);
    CHECK(par.records == serial.records);
    CHECK(par.summary == serial.summary);
  }
}

TEST_CASE("failures are reported, replayable and deterministic") {
  SweepGrid g;
  g.q = {2, 4};
  g.r = {1, 3};
  g.u0 = {0, 3};
  g.n_max = 8;
  SweepOptions o;
  o.gcd_filter = false;
  const SweepResult serial = run_sweep_serial(g, o);
  REQUIRE(serial.summary.failures > 0);
  REQUIRE(serial.summary.first_failure.has_value());
  const Counterexample c = *serial.summary.first_failure;
  const Verdict again = replay(c);
  CHECK_FALSE(again.holds);
  CHECK(again.detail == c.detail);

  for (int jobs : {1, 3, 8}) {
    o.jobs = jobs;
    const SweepResult par = run_sweep(g, o);
    CHECK(par.summary == serial.summary);
    CHECK(par.records == serial.records);
  }

  o.fail_fast = true;
  o.jobs = 1;
  const SweepResult ff1 = run_sweep(g, o);
  o.jobs = 8;
  const SweepResult ff8 = run_sweep(g, o);
  CHECK(ff1.summary.first_failure == c);
  CHECK(ff8.summary == ff1.summary);
  CHECK(ff8.records == ff1.records);
  CHECK(ff1.summary.checked <= serial.summary.checked);
}

TEST_CASE("seeded sub-sampling") {
  SweepGrid g = small_grid(4);
  std::size_t skipped = 0;
  const auto all = enumerate_grid(g, true, skipped);
  g.sample_seed = 7;
  g.sample_count = 5;
  const auto a = enumerate_grid(g, true, skipped);
  const auto b = enumerate_grid(g, true, skipped);
  CHECK(a.size() == 5);
  CHECK(a == b);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto key = [](const Progression& p) { return std::tuple(p.q(), p.r(), p.u0()); };
    CHECK(key(a[i - 1]) < key(a[i]));
  }
  g.sample_count.reset();
  CHECK(enumerate_grid(g, true, skipped) == all);
  g.sample_count = all.size() + 10;
  CHECK(enumerate_grid(g, true, skipped) == all);
}

TEST_CASE("per-suite limits") {
  SweepGrid g;
  g.q = {2, 2};
  g.r = {1, 1};
  g.u0 = {0, 0};
  g.n_max = 6;
  SweepOptions o;
  o.suites = {Suite::Bounds, Suite::Monotonicity};
  o.limits[Suite::Bounds] = 3;
  const SweepResult res = run_sweep(g, o);
  REQUIRE(res.records.size() == 6);
  CHECK_FALSE(res.records[2].verdicts.empty());
  CHECK(res.records[3].verdicts.empty());
  CHECK(res.summary.suites.count(Suite::Identities) == 0);
  CHECK(res.summary.suites.at(Suite::Monotonicity).passed == 1);
}
