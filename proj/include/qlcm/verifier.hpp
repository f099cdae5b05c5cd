#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qlcm/bounds.hpp"
#include "qlcm/progression.hpp"
#include "qlcm/verdict.hpp"

namespace qlcm {

// Gap identity for 0 <= i, j <= i_max, coprimality of u_n with r and q, and
// the brute-force min-sum bound for 1 <= k <= j <= n <= i_max.
Verdict check_identities(const Progression& p, std::int64_t i_max);

// C_{n,k} over 1 <= k <= n: non-decreasing up to min(n, k_n), strictly
// decreasing after, maximal at l_n, and l_n is the largest maximiser.
Verdict check_unimodality(const Progression& p, std::int64_t n);

// k_{n+1} in {k_n, k_n + 1}, l_{n+1} in {l_n, l_n + 1}, and a step in l
// forces l_n = k_n and l_{n+1} = k_{n+1} = k_n + 1.
Verdict check_index_monotonicity(const Progression& p, std::int64_t n_max);

// C_{n+1,l_{n+1}} >= (r + 1) q^(l_n - 1) C_{n,l_n}.
Verdict check_step_ratio(const Progression& p, std::int64_t n_max);

// C_{n,l_n} and lcm(u_1..u_n) are both >= u_1 (r+1)^(n-1) q^(sum_{i<n}(l_i - 1)).
Verdict check_chain_bound(const Progression& p, std::int64_t n_max);

// r (A+1)^2 > q^(n - 2 l_n) and 4B > q^(n - 2 l_n); the logarithm-free form
// of the two lower bounds on l_n.
Verdict check_ell_lower_bounds(const Progression& p, std::int64_t n_max);

// theorem1_check over every 1 <= k <= n <= n_max.
Verdict check_theorem1(const Progression& p, std::int64_t n_max);

// Every applicable bound kind for 1 <= n <= n_max.
Verdict check_bounds(const Progression& p, std::int64_t n_max);

enum class Suite { Identities, Unimodality, Monotonicity, StepRatio, Chain, EllBounds, Theorem1, Bounds };

inline constexpr Suite kAllSuites[] = {Suite::Identities, Suite::Unimodality, Suite::Monotonicity, Suite::StepRatio,
                                       Suite::Chain,      Suite::EllBounds,   Suite::Theorem1,     Suite::Bounds};

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

// Suites that need the threshold machinery and are skipped at q = 1.
bool needs_q_at_least_two(Suite s);

// Runs one suite on one progression up to `limit`.
Verdict run_suite(Suite s, const Progression& p, std::int64_t limit);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct SweepGrid {
  IntRange q{1, 1};
  IntRange r{1, 1};
  IntRange u0{0, 0};
  std::int64_t n_max = 1;
  // With a seed, keep `sample_count` of the valid triples (chosen by a seeded
  // shuffle, reported in enumeration order).
  std::optional<std::uint64_t> sample_seed;
  std::optional<std::size_t> sample_count;
};

struct SweepOptions {
  std::set<Suite> suites{std::begin(kAllSuites), std::end(kAllSuites)};
  // Per-suite limit overrides; suites without an entry use grid.n_max.
  std::map<Suite, std::int64_t> limits;
  int jobs = 1;
  bool fail_fast = false;
  // Off only for exercising the failure path.
  bool gcd_filter = true;
};

struct SweepRecord {
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t u0 = 0;
  std::int64_t n = 0;
  std::size_t lcm_bits = 0;
  std::optional<std::int64_t> k_n;    // absent at q = 1
  std::optional<std::int64_t> ell_n;  // absent at q = 1
  std::map<BoundKind, bool> verdicts;
  // log2(lcm / tightest applicable bound); display only.
  std::optional<double> slack_log2;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct Counterexample {
  Suite suite = Suite::Identities;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t u0 = 0;
  std::int64_t limit = 0;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SuiteTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  friend bool operator==(const SuiteTally&, const SuiteTally&) = default;
};

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t skipped_gcd = 0;
  std::size_t failures = 0;
  std::map<Suite, SuiteTally> suites;
  std::optional<Counterexample> first_failure;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

// Valid progressions of the grid in (q, r, u0) lexicographic order, after
// optional sub-sampling. `skipped` receives the number of gcd rejections.
std::vector<Progression> enumerate_grid(const SweepGrid& grid, bool gcd_filter, std::size_t& skipped);

// Grid points run in parallel (OpenMP, `options.jobs` threads); results are
// placed by enumeration index, so the output does not depend on scheduling.
SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& options);

// Single-threaded reference for run_sweep.
SweepResult run_sweep_serial(const SweepGrid& grid, const SweepOptions& options);

// Re-runs the failing suite on the recorded parameters.
Verdict replay(const Counterexample& c);

}  // namespace qlcm
