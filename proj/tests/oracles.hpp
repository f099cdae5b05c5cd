#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's arithmetic paths.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline mpz_class pow_z(std::int64_t base, std::int64_t e) {
  mpz_class out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= static_cast<long>(base);
  return out;
}

// (q^n - 1)/(q - 1) by power-then-divide; n at q = 1.
inline mpz_class q_int(std::int64_t n, std::int64_t q) {
  if (q == 1) return static_cast<long>(n);
  mpz_class num = pow_z(q, n) - 1;
  mpz_class den = static_cast<long>(q - 1);
  return num / den;
}

// Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline mpz_class q_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
  std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    t[i].assign(static_cast<std::size_t>(i) + 1, 0);
    t[i][0] = 1;
    t[i][i] = 1;
    for (std::int64_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + pow_z(q, j) * t[i - 1][j];
  }
  return t[n][k];
}

// Ordinary Pascal triangle.
inline mpz_class binomial(std::int64_t n, std::int64_t k) {
  std::vector<mpz_class> row{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Euclid by repeated remainder.
inline mpz_class gcd(mpz_class a, mpz_class b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    mpz_class t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pairwise a*b/gcd(a,b) fold using the Euclid above.
inline mpz_class lcm_pairwise(const std::vector<mpz_class>& values) {
  mpz_class acc = 1;
  for (const mpz_class& v : values) acc = acc * v / gcd(acc, v);
  return acc;
}

// lcm from prime factorisations by trial division; values must be small.
inline mpz_class lcm_by_factorization(const std::vector<std::uint64_t>& values) {
  std::map<std::uint64_t, int> best;
  for (std::uint64_t v : values) {
    for (std::uint64_t p = 2; p * p <= v; ++p) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (e > best[p]) best[p] = e;
    }
    if (v > 1 && best[v] < 1) best[v] = 1;
  }
  mpz_class out = 1;
  for (auto [p, e] : best) out *= pow_z(static_cast<std::int64_t>(p), e);
  return out;
}

inline mpz_class term(std::int64_t q, std::int64_t r, std::int64_t u0, std::int64_t n) {
  return q_int(n, q) * static_cast<long>(r) + static_cast<long>(u0);
}

// f(x) <= q^n with all fractions cleared: for x >= 1 both sides are
// integers; for x <= 0 multiply through by q^(2(1-x)).
inline bool f_at_most_q_pow(std::int64_t q, std::int64_t r, std::int64_t u0, std::int64_t x, std::int64_t n) {
  const mpz_class c = static_cast<long>(u0 * (q - 1) + 1 - r);
  if (x >= 1) {
    const mpz_class t = pow_z(q, x - 1);
    return t * (r * t + c) <= pow_z(q, n);
  }
  const std::int64_t d = 1 - x;
  return static_cast<long>(r) + c * pow_z(q, d) <= pow_z(q, n + 2 * d);
}

// Largest k in [lo, n] with f(k) <= q^n by exhaustive search.
inline std::int64_t k_index(std::int64_t q, std::int64_t r, std::int64_t u0, std::int64_t n, std::int64_t lo = -400) {
  std::int64_t best = lo - 1;
  for (std::int64_t k = lo; k <= n + 3; ++k) {
    if (f_at_most_q_pow(q, r, u0, k, n)) best = k;
  }
  return best;
}

}  // namespace oracle
