#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "qlcm/lcm_engine.hpp"
#include "qlcm/verifier.hpp"

namespace qlcm {

namespace {

struct SuiteOutcome {
  Suite suite;
  bool skipped = false;
  Verdict verdict;
};

struct PointOutcome {
  std::vector<SweepRecord> records;
  std::vector<SuiteOutcome> suites;
  bool failed = false;
};

std::int64_t limit_for(Suite suite, const SweepGrid& grid, const SweepOptions& options) {
  const auto it = options.limits.find(suite);
  return it == options.limits.end() ? grid.n_max : it->second;
}

void validate(const SweepGrid& grid, const SweepOptions& options) {
  for (const IntRange* range : {&grid.q, &grid.r, &grid.u0}) {
    if (range->lo > range->hi) throw DomainError("sweep grid: empty range");
  }
  if (grid.q.lo < 1 || grid.r.lo < 1 || grid.u0.lo < 0) throw DomainError("sweep grid: q, r >= 1 and u0 >= 0 required");
  if (grid.n_max < 1) throw DomainError("sweep grid: n_max must be >= 1");
  if (options.jobs < 1) throw DomainError("sweep: jobs must be >= 1");
  for (const auto& [suite, limit] : options.limits) {
    if (limit < 1) throw DomainError("sweep: suite limit must be >= 1 for " + std::string(to_string(suite)));
  }
}

// The per-grid-point kernel shared by the serial and parallel drivers.
PointOutcome evaluate_point(const Progression& p, const SweepGrid& grid, const SweepOptions& options) {
  PointOutcome out;
  const bool bounds_selected = options.suites.count(Suite::Bounds) != 0;
  const std::int64_t bounds_limit = limit_for(Suite::Bounds, grid, options);

  PrefixLcmStream stream(p);
  out.records.reserve(static_cast<std::size_t>(grid.n_max));
  for (std::int64_t n = 1; n <= grid.n_max; ++n) {
    const Integer& lcm = stream.next().lcm;
    SweepRecord rec;
    rec.q = p.q();
    rec.r = p.r();
    rec.u0 = p.u0();
    rec.n = n;
    rec.lcm_bits = bit_length(lcm);
    if (p.q() >= 2) {
      rec.k_n = k_index(p, n);
      rec.ell_n = std::max<std::int64_t>(1, *rec.k_n);
    }
    if (bounds_selected && n <= bounds_limit) {
      for (BoundKind kind : kAllBoundKinds) {
        if (!applies(kind, p)) continue;
        const BoundCertificate cert = bound_holds(p, n, kind, lcm);
        rec.verdicts[kind] = cert.holds;
        if (!rec.slack_log2 || cert.slack_log2 < *rec.slack_log2) rec.slack_log2 = cert.slack_log2;
      }
    }
    out.records.push_back(std::move(rec));
  }

  for (Suite suite : kAllSuites) {
    if (options.suites.count(suite) == 0) continue;
    SuiteOutcome so{suite, false, Verdict::pass()};
    if (needs_q_at_least_two(suite) && p.q() < 2) {
      so.skipped = true;
    } else {
      so.verdict = run_suite(suite, p, limit_for(suite, grid, options));
      if (!so.verdict) out.failed = true;
    }
    out.suites.push_back(std::move(so));
    if (out.failed && options.fail_fast) break;
  }
  return out;
}

SweepResult aggregate(const std::vector<Progression>& points, std::vector<PointOutcome>& outcomes, std::size_t count,
                      std::size_t skipped_gcd, const SweepGrid& grid, const SweepOptions& options) {
  SweepResult result;
  result.summary.skipped_gcd = skipped_gcd;
  for (Suite suite : options.suites) result.summary.suites[suite] = SuiteTally{};
  for (std::size_t i = 0; i < count; ++i) {
    PointOutcome& o = outcomes[i];
    const Progression& p = points[i];
    ++result.summary.checked;
    for (SweepRecord& rec : o.records) result.records.push_back(std::move(rec));
    for (const SuiteOutcome& so : o.suites) {
      SuiteTally& tally = result.summary.suites[so.suite];
      if (so.skipped) {
        ++tally.skipped;
      } else if (so.verdict) {
        ++tally.passed;
      } else {
        ++tally.failed;
        ++result.summary.failures;
        if (!result.summary.first_failure) {
          result.summary.first_failure =
              Counterexample{so.suite, p.q(), p.r(), p.u0(), limit_for(so.suite, grid, options), so.verdict.detail};
        }
      }
    }
  }
  return result;
}

}  // namespace

std::vector<Progression> enumerate_grid(const SweepGrid& grid, bool gcd_filter, std::size_t& skipped) {
  skipped = 0;
  std::vector<Progression> points;
  for (std::int64_t q = grid.q.lo; q <= grid.q.hi; ++q) {
    for (std::int64_t r = grid.r.lo; r <= grid.r.hi; ++r) {
      for (std::int64_t u0 = grid.u0.lo; u0 <= grid.u0.hi; ++u0) {
        if (!gcd_filter) {
          points.push_back(Progression::unchecked(q, r, u0));
          continue;
        }
        try {
          points.push_back(make_progression(q, r, u0));
        } catch (const CoprimalityError&) {
          ++skipped;
        }
      }
    }
  }

  if (grid.sample_seed && grid.sample_count && *grid.sample_count < points.size()) {
    // Partial Fisher-Yates on raw engine output so the choice is identical on
    // every standard library.
    std::mt19937_64 engine(*grid.sample_seed);
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < *grid.sample_count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(engine() % (order.size() - i));
      std::swap(order[i], order[j]);
    }
    order.resize(*grid.sample_count);
    std::sort(order.begin(), order.end());
    std::vector<Progression> chosen;
    chosen.reserve(order.size());
    for (std::size_t idx : order) chosen.push_back(points[idx]);
    points = std::move(chosen);
  }
  return points;
}

SweepResult run_sweep_serial(const SweepGrid& grid, const SweepOptions& options) {
  validate(grid, options);
  std::size_t skipped = 0;
  const auto points = enumerate_grid(grid, options.gcd_filter, skipped);
  std::vector<PointOutcome> outcomes;
  outcomes.reserve(points.size());
  for (const Progression& p : points) {
    outcomes.push_back(evaluate_point(p, grid, options));
    if (options.fail_fast && outcomes.back().failed) break;
  }
  return aggregate(points, outcomes, outcomes.size(), skipped, grid, options);
}

SweepResult run_sweep(const SweepGrid& grid, const SweepOptions& options) {
  validate(grid, options);
  std::size_t skipped = 0;
  const auto points = enumerate_grid(grid, options.gcd_filter, skipped);
  const std::size_t total = points.size();
  std::vector<PointOutcome> outcomes(total);
  std::vector<std::exception_ptr> errors(total);

  // Lowest failing index seen so far; work past it is skipped under fail-fast.
  std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};
  const std::int64_t count = static_cast<std::int64_t>(total);

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.jobs)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (options.fail_fast && idx > stop_at.load(std::memory_order_relaxed)) continue;
    try {
      outcomes[idx] = evaluate_point(points[idx], grid, options);
      if (options.fail_fast && outcomes[idx].failed) {
        std::size_t seen = stop_at.load();
        while (idx < seen && !stop_at.compare_exchange_weak(seen, idx)) {
        }
      }
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }

  const std::size_t used = options.fail_fast ? std::min(total, stop_at.load() == std::numeric_limits<std::size_t>::max()
                                                                    ? total
                                                                    : stop_at.load() + 1)
                                             : total;
  for (std::size_t i = 0; i < used; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  return aggregate(points, outcomes, used, skipped, grid, options);
}

}  // namespace qlcm
