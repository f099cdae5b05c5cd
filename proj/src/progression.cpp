#include "qlcm/progression.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qlcm {

namespace {

std::string triple(std::int64_t q, std::int64_t r, std::int64_t u0) {
  return "(q=" + std::to_string(q) + ", r=" + std::to_string(r) + ", u0=" + std::to_string(u0) + ")";
}

void check_signs(std::int64_t q, std::int64_t r, std::int64_t u0) {
  if (q < 1) throw DomainError("progression: q must be >= 1 " + triple(q, r, u0));
  if (r < 1) throw DomainError("progression: r must be >= 1 " + triple(q, r, u0));
  if (u0 < 0) throw DomainError("progression: u0 must be >= 0 " + triple(q, r, u0));
}

void require_q_at_least_two(const Progression& p, const char* what) {
  if (p.q() < 2) {
    throw UnsupportedBase(std::string(what) + ": requires q >= 2 " + triple(p.q(), p.r(), p.u0()));
  }
}

}  // namespace

Progression Progression::unchecked(std::int64_t q, std::int64_t r, std::int64_t u0) {
  check_signs(q, r, u0);
  return Progression(q, r, u0);
}

Progression make_progression(std::int64_t q, std::int64_t r, std::int64_t u0) {
  check_signs(q, r, u0);
  if (std::gcd(u0, r) != 1) {
    throw CoprimalityError(CoprimalityError::Pair::U0_R, "gcd(u0, r) != 1 " + triple(q, r, u0));
  }
  if (std::gcd(r + u0, q) != 1) {
    throw CoprimalityError(CoprimalityError::Pair::U1_Q, "gcd(u1, q) != 1 " + triple(q, r, u0));
  }
  return Progression(q, r, u0);
}

GeometricShift make_geometric_shift(std::int64_t a, std::int64_t b, std::int64_t q) {
  const std::string where = "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                            ", q=" + std::to_string(q) + ")";
  if (q < 2) throw DomainError("geometric shift: q must be >= 2 " + where);
  if (a < 1) throw DomainError("geometric shift: a must be >= 1 " + where);
  if (b < -a) throw DomainError("geometric shift: b must be >= -a " + where);
  if (std::gcd(a * q, b) != 1) {
    throw CoprimalityError(CoprimalityError::Pair::AQ_B, "gcd(a q, b) != 1 " + where);
  }
  if (std::gcd(a + b, q - 1) != 1) {
    throw CoprimalityError(CoprimalityError::Pair::AB_QM1, "gcd(a + b, q - 1) != 1 " + where);
  }
  return GeometricShift(a, b, q);
}

Progression from_geometric(const GeometricShift& gs) {
  const std::int64_t r = gs.a() * (gs.q() - 1);
  const std::int64_t u0 = gs.a() + gs.b();
  try {
    return make_progression(gs.q(), r, u0);
  } catch (const CoprimalityError& e) {
    throw std::logic_error(std::string("from_geometric: shift hypotheses did not transfer: ") + e.what());
  }
}

std::optional<GeometricShift> as_geometric(const Progression& p) {
  if (p.q() < 2 || p.r() % (p.q() - 1) != 0) return std::nullopt;
  const std::int64_t a = p.r() / (p.q() - 1);
  try {
    return make_geometric_shift(a, p.u0() - a, p.q());
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Integer term(const Progression& p, std::int64_t n) {
  if (n < 0) throw DomainError("term: negative index " + std::to_string(n));
  Integer out = q_int(n, p.base());
  out *= static_cast<long>(p.r());
  out += static_cast<long>(p.u0());
  return out;
}

Integer gap(const Progression& p, std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw DomainError("gap: negative index");
  const std::int64_t lo = std::min(i, j);
  const std::int64_t diff = i > j ? i - j : j - i;
  Integer out = power(p.q(), static_cast<std::uint64_t>(lo));
  out *= q_int(diff, p.base());
  out *= static_cast<long>(p.r());
  return out;
}

CnkValue cnk(const Progression& p, std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) {
    throw DomainError("cnk: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  Integer numerator = 1;
  for (std::int64_t i = k; i <= n; ++i) numerator *= term(p, i);
  return CnkValue{make_rational(numerator, q_factorial(n - k, p.base())), n, k};
}

Rational f_eval(const Progression& p, std::int64_t x) {
  require_q_at_least_two(p, "f_eval");
  const Rational t = rational_power(p.q(), x - 1);
  const Integer affine = Integer(static_cast<long>(p.u0() * (p.q() - 1) + 1 - p.r()));
  Rational out = t * (Rational(static_cast<long>(p.r())) * t + Rational(affine));
  out.canonicalize();
  return out;
}

std::int64_t k_index(const Progression& p, std::int64_t n) {
  require_q_at_least_two(p, "k_index");
  if (n < 1) throw DomainError("k_index: n must be >= 1, got " + std::to_string(n));
  const Rational limit(power(p.q(), static_cast<std::uint64_t>(n)));
  // f(k) > q^n for every k > n, and f(k) -> 0 as k -> -inf, so the scan stops.
  for (std::int64_t k = n;; --k) {
    if (f_eval(p, k) <= limit) return k;
  }
}

std::int64_t l_index(const Progression& p, std::int64_t n) { return std::max<std::int64_t>(1, k_index(p, n)); }

}  // namespace qlcm
