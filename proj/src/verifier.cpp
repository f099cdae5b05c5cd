#include "qlcm/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qlcm/lcm_engine.hpp"

namespace qlcm {

namespace {

using u64 = std::uint64_t;

std::string s(std::int64_t v) { return std::to_string(v); }

void require_q_at_least_two(const Progression& p, const char* what) {
  if (p.q() < 2) throw UnsupportedBase(std::string(what) + ": requires q >= 2");
}

// k_1..k_{n_max}, index 0 unused.
std::vector<std::int64_t> k_sequence(const Progression& p, std::int64_t n_max) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t n = 1; n <= n_max; ++n) k[static_cast<std::size_t>(n)] = k_index(p, n);
  return k;
}

std::int64_t ell_of(std::int64_t k) { return std::max<std::int64_t>(1, k); }

}  // namespace

Verdict check_identities(const Progression& p, std::int64_t i_max) {
  if (i_max < 1) throw DomainError("check_identities: i_max must be >= 1");
  std::vector<Integer> u;
  u.reserve(static_cast<std::size_t>(i_max) + 1);
  for (std::int64_t i = 0; i <= i_max; ++i) u.push_back(term(p, i));

  for (std::int64_t i = 0; i <= i_max; ++i) {
    for (std::int64_t j = 0; j <= i_max; ++j) {
      const Integer direct = abs(u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)]);
      if (gap(p, i, j) != direct) {
        return Verdict::fail("gap identity: i=" + s(i) + " j=" + s(j) + " closed form " + to_decimal(gap(p, i, j)) +
                             " != |u_i - u_j| = " + to_decimal(direct));
      }
    }
  }

  const Integer r = static_cast<long>(p.r());
  const Integer q = static_cast<long>(p.q());
  for (std::int64_t n = 0; n <= i_max; ++n) {
    const Integer& un = u[static_cast<std::size_t>(n)];
    if (gcd(un, r) != 1) return Verdict::fail("coprimality: gcd(u_" + s(n) + ", r) != 1");
    if (n >= 1 && gcd(un, q) != 1) return Verdict::fail("coprimality: gcd(u_" + s(n) + ", q) != 1");
  }

  // sum_{k <= i <= n, i != j} min(i, j) <= (n - k)(n + k - 1)/2, summed by
  // brute force while n grows.
  for (std::int64_t k = 1; k <= i_max; ++k) {
    for (std::int64_t j = k; j <= i_max; ++j) {
      std::int64_t sum = 0;
      for (std::int64_t i = k; i < j; ++i) sum += i;
      for (std::int64_t n = j; n <= i_max; ++n) {
        if (n > j) sum += j;
        if (2 * sum > (n - k) * (n + k - 1)) {
          return Verdict::fail("min-sum bound: n=" + s(n) + " k=" + s(k) + " j=" + s(j) + " sum=" + s(sum));
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_unimodality(const Progression& p, std::int64_t n) {
  require_q_at_least_two(p, "check_unimodality");
  if (n < 1) throw DomainError("check_unimodality: n must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (std::int64_t k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = cnk(p, n, k).value;

  const std::int64_t kn = k_index(p, n);
  const std::int64_t ln = l_index(p, n);
  const Rational best = *std::max_element(c.begin() + 1, c.end());
  const std::string at = "n=" + s(n) + ": ";

  if (c[static_cast<std::size_t>(ln)] != best) {
    return Verdict::fail(at + "C_{n,l_n} at l_n=" + s(ln) + " is " + to_string(c[static_cast<std::size_t>(ln)]) +
                         " but the maximum is " + to_string(best));
  }
  for (std::int64_t k = 2; k <= n; ++k) {
    const Rational& prev = c[static_cast<std::size_t>(k - 1)];
    const Rational& cur = c[static_cast<std::size_t>(k)];
    if (k <= kn && cur < prev) return Verdict::fail(at + "C decreases at k=" + s(k) + " <= k_n=" + s(kn));
    if (k > kn && !(cur < prev)) return Verdict::fail(at + "C does not decrease at k=" + s(k) + " > k_n=" + s(kn));
  }
  for (std::int64_t k = ln + 1; k <= n; ++k) {
    if (c[static_cast<std::size_t>(k)] == best) {
      return Verdict::fail(at + "maximum also attained at k=" + s(k) + " > l_n=" + s(ln));
    }
  }
  return Verdict::pass();
}

Verdict check_index_monotonicity(const Progression& p, std::int64_t n_max) {
  require_q_at_least_two(p, "check_index_monotonicity");
  if (n_max < 1) throw DomainError("check_index_monotonicity: n_max must be >= 1");
  const auto k = k_sequence(p, n_max);
  for (std::int64_t n = 1; n < n_max; ++n) {
    const std::int64_t kn = k[static_cast<std::size_t>(n)];
    const std::int64_t kn1 = k[static_cast<std::size_t>(n + 1)];
    const std::int64_t ln = ell_of(kn);
    const std::int64_t ln1 = ell_of(kn1);
    const std::string at = "n=" + s(n) + ": ";
    if (kn1 != kn && kn1 != kn + 1) return Verdict::fail(at + "k_{n+1}=" + s(kn1) + " not in {k_n, k_n+1}, k_n=" + s(kn));
    if (ln1 != ln && ln1 != ln + 1) return Verdict::fail(at + "l_{n+1}=" + s(ln1) + " not in {l_n, l_n+1}, l_n=" + s(ln));
    if (ln1 == ln + 1 && !(ln == kn && ln1 == kn1 && kn1 == kn + 1)) {
      return Verdict::fail(at + "l steps up but l_n=" + s(ln) + " k_n=" + s(kn) + " k_{n+1}=" + s(kn1));
    }
  }
  return Verdict::pass();
}

Verdict check_step_ratio(const Progression& p, std::int64_t n_max) {
  require_q_at_least_two(p, "check_step_ratio");
  if (n_max < 1) throw DomainError("check_step_ratio: n_max must be >= 1");
  const auto k = k_sequence(p, n_max);
  Rational prev = cnk(p, 1, ell_of(k[1])).value;
  for (std::int64_t n = 1; n < n_max; ++n) {
    const std::int64_t ln = ell_of(k[static_cast<std::size_t>(n)]);
    const Rational next = cnk(p, n + 1, ell_of(k[static_cast<std::size_t>(n + 1)])).value;
    const Rational floor = Rational(Integer(static_cast<long>(p.r() + 1)) * power(p.q(), static_cast<u64>(ln - 1))) * prev;
    if (next < floor) {
      return Verdict::fail("n=" + s(n) + ": C_{n+1,l_{n+1}} = " + to_string(next) + " < (r+1) q^(l_n-1) C_{n,l_n} = " +
                           to_string(floor));
    }
    prev = next;
  }
  return Verdict::pass();
}

Verdict check_chain_bound(const Progression& p, std::int64_t n_max) {
  require_q_at_least_two(p, "check_chain_bound");
  if (n_max < 1) throw DomainError("check_chain_bound: n_max must be >= 1");
  const auto k = k_sequence(p, n_max);
  const Integer u1 = term(p, 1);
  PrefixLcmStream stream(p);
  std::int64_t exponent_sum = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const Integer& lcm = stream.next().lcm;
    if (n >= 2) exponent_sum += ell_of(k[static_cast<std::size_t>(n - 1)]) - 1;
    const Integer rhs = u1 * power(p.r() + 1, static_cast<u64>(n - 1)) * power(p.q(), static_cast<u64>(exponent_sum));
    const Rational c = cnk(p, n, ell_of(k[static_cast<std::size_t>(n)])).value;
    if (c < Rational(rhs)) {
      return Verdict::fail("n=" + s(n) + ": C_{n,l_n} = " + to_string(c) + " < " + to_decimal(rhs));
    }
    if (lcm < rhs) return Verdict::fail("n=" + s(n) + ": lcm = " + to_decimal(lcm) + " < " + to_decimal(rhs));
  }
  return Verdict::pass();
}

Verdict check_ell_lower_bounds(const Progression& p, std::int64_t n_max) {
  require_q_at_least_two(p, "check_ell_lower_bounds");
  if (n_max < 1) throw DomainError("check_ell_lower_bounds: n_max must be >= 1");
  const BoundConstants c = bound_constants(p);
  const Rational a1 = c.A + 1;
  const Rational via_a = Rational(static_cast<long>(p.r())) * a1 * a1;
  const Rational via_b = 4 * c.B;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t ln = l_index(p, n);
    const Rational qe = rational_power(p.q(), n - 2 * ln);
    if (!(via_a > qe)) {
      return Verdict::fail("n=" + s(n) + ": r(A+1)^2 = " + to_string(via_a) + " <= q^(n-2l_n) = " + to_string(qe));
    }
    if (!(via_b > qe)) {
      return Verdict::fail("n=" + s(n) + ": 4B = " + to_string(via_b) + " <= q^(n-2l_n) = " + to_string(qe));
    }
  }
  return Verdict::pass();
}

Verdict check_theorem1(const Progression& p, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("check_theorem1: n_max must be >= 1");
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      Verdict v = theorem1_check(p, k, n);
      if (!v) return v;
    }
  }
  return Verdict::pass();
}

Verdict check_bounds(const Progression& p, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("check_bounds: n_max must be >= 1");
  PrefixLcmStream stream(p);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const Integer& lcm = stream.next().lcm;
    for (BoundKind kind : kAllBoundKinds) {
      if (!applies(kind, p)) continue;
      const BoundCertificate cert = bound_holds(p, n, kind, lcm);
      if (!cert.holds) {
        return Verdict::fail(std::string(to_string(kind)) + " fails at n=" + s(n) + ": lhs4 " + to_decimal(cert.lhs4) +
                             " < rhs4 " + to_decimal(cert.rhs4));
      }
    }
  }
  return Verdict::pass();
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Identities: return "identities";
    case Suite::Unimodality: return "unimodality";
    case Suite::Monotonicity: return "monotonicity";
    case Suite::StepRatio: return "step-ratio";
    case Suite::Chain: return "chain";
    case Suite::EllBounds: return "ell-bounds";
    case Suite::Theorem1: return "theorem1";
    case Suite::Bounds: return "bounds";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite suite : kAllSuites) {
    if (to_string(suite) == name) return suite;
  }
  return std::nullopt;
}

bool needs_q_at_least_two(Suite suite) {
  switch (suite) {
    case Suite::Unimodality:
    case Suite::Monotonicity:
    case Suite::StepRatio:
    case Suite::Chain:
    case Suite::EllBounds:
      return true;
    default:
      return false;
  }
}

Verdict run_suite(Suite suite, const Progression& p, std::int64_t limit) {
  switch (suite) {
    case Suite::Identities: return check_identities(p, limit);
    case Suite::Unimodality:
      for (std::int64_t n = 1; n <= limit; ++n) {
        Verdict v = check_unimodality(p, n);
        if (!v) return v;
      }
      return Verdict::pass();
    case Suite::Monotonicity: return check_index_monotonicity(p, limit);
    case Suite::StepRatio: return check_step_ratio(p, limit);
    case Suite::Chain: return check_chain_bound(p, limit);
    case Suite::EllBounds: return check_ell_lower_bounds(p, limit);
    case Suite::Theorem1: return check_theorem1(p, limit);
    case Suite::Bounds: return check_bounds(p, limit);
  }
  throw DomainError("run_suite: unknown suite");
}

Verdict replay(const Counterexample& c) {
  return run_suite(c.suite, Progression::unchecked(c.q, c.r, c.u0), c.limit);
}

}  // namespace qlcm
