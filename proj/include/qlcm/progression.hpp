#pragma once

#include <cstdint>
#include <optional>

#include "qlcm/exact.hpp"
#include "qlcm/qcalc.hpp"

namespace qlcm {

// The q-arithmetic progression u_n = r [n]_q + u0, with gcd(u0, r) = 1 and
// gcd(u1, q) = 1 enforced at construction.
class Progression {
 public:
  std::int64_t q() const noexcept { return q_; }
  std::int64_t r() const noexcept { return r_; }
  std::int64_t u0() const noexcept { return u0_; }
  QBase base() const { return QBase(q_); }

  // Skips the gcd hypotheses (the sign constraints are still enforced).
  // Only meant for exercising failure paths and replaying diagnostics.
  static Progression unchecked(std::int64_t q, std::int64_t r, std::int64_t u0);

  friend bool operator==(const Progression&, const Progression&) = default;

 private:
  Progression(std::int64_t q, std::int64_t r, std::int64_t u0) : q_(q), r_(r), u0_(u0) {}
  friend Progression make_progression(std::int64_t, std::int64_t, std::int64_t);

  std::int64_t q_;
  std::int64_t r_;
  std::int64_t u0_;
};

// Throws DomainError for q < 1, r < 1 or u0 < 0, and CoprimalityError when a
// gcd hypothesis fails.
Progression make_progression(std::int64_t q, std::int64_t r, std::int64_t u0);

// v_n = a q^n + b with q >= 2, a >= 1, b >= -a, gcd(aq, b) = gcd(a + b, q - 1) = 1.
class GeometricShift {
 public:
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t q() const noexcept { return q_; }

  friend bool operator==(const GeometricShift&, const GeometricShift&) = default;

 private:
  GeometricShift(std::int64_t a, std::int64_t b, std::int64_t q) : a_(a), b_(b), q_(q) {}
  friend GeometricShift make_geometric_shift(std::int64_t, std::int64_t, std::int64_t);

  std::int64_t a_;
  std::int64_t b_;
  std::int64_t q_;
};

GeometricShift make_geometric_shift(std::int64_t a, std::int64_t b, std::int64_t q);

// v_n = a (q - 1) [n]_q + (a + b).
Progression from_geometric(const GeometricShift& gs);

// Inverse of from_geometric when (q - 1) divides r and q >= 2.
std::optional<GeometricShift> as_geometric(const Progression& p);

struct CnkValue {
  Rational value;
  std::int64_t n = 0;
  std::int64_t k = 0;
};

Integer term(const Progression& p, std::int64_t n);

// |u_i - u_j| in closed form r q^min(i,j) [|i - j|]_q.
Integer gap(const Progression& p, std::int64_t i, std::int64_t j);

// C_{n,k} = u_k u_{k+1} ... u_n / [n - k]_q! for 1 <= k <= n.
CnkValue cnk(const Progression& p, std::int64_t n, std::int64_t k);

// f(x) = q^(x-1) (r q^(x-1) + u0 (q - 1) + 1 - r), exact for every integer x.
Rational f_eval(const Progression& p, std::int64_t x);

// Largest integer k with f(k) <= q^n. Always <= n, possibly <= 0.
std::int64_t k_index(const Progression& p, std::int64_t n);

// max(1, k_index(p, n)); the maximiser of C_{n,k} over 1 <= k <= n.
std::int64_t l_index(const Progression& p, std::int64_t n);

}  // namespace qlcm
