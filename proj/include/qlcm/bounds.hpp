#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qlcm/exact.hpp"
#include "qlcm/progression.hpp"

namespace qlcm {

enum class BoundKind { Theorem2, Theorem3, Corollary3, Corollary4, HongFeng, BouslaFarhi };

inline constexpr BoundKind kAllBoundKinds[] = {BoundKind::Theorem2,   BoundKind::Theorem3, BoundKind::Corollary3,
                                               BoundKind::Corollary4, BoundKind::HongFeng, BoundKind::BouslaFarhi};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

// Whether bound_holds(p, n, kind) accepts this progression.
bool applies(BoundKind kind, const Progression& p);

struct BoundConstants {
  Rational A;  // max(0, (u0(q-1) + 1 - r) / (2r))
  Rational B;  // max(r, (u0(q-1) + 1 - r) / 2)
};

BoundConstants bound_constants(const Progression& p);

struct GeometricConstants {
  Rational a_prime;  // max(0, b/(2a) + 1/(2a(q-1)))
  Rational b_prime;  // max(a(q-1), (b(q-1) + 1) / 2)
};

// Raw formulas; no hypothesis check on (a, b, q) beyond a >= 1, q >= 2.
GeometricConstants geometric_constants(std::int64_t a, std::int64_t b, std::int64_t q);
GeometricConstants geometric_constants(const GeometricShift& gs);

// Exact verdict for one lower bound at one n.
//
// Every bound has the shape lcm >= c * x^(n-1) * q^(e/4) with x possibly
// involving a square root. Raising both sides to the fourth power and moving
// every denominator (and q^(-e) when e < 0) across gives two positive integers
// lhs4 and rhs4 with  lcm >= bound  <=>  lhs4 >= rhs4.  `slack_log2` and
// `bound_log2` are double-precision display values and never feed `holds`.
struct BoundCertificate {
  BoundKind kind = BoundKind::Theorem2;
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t u0 = 0;
  Integer lhs4;
  Integer rhs4;
  bool holds = false;
  double bound_log2 = 0.0;
  double slack_log2 = 0.0;
};

// `lcm` must equal lcm_range(p, 1, n); the short overload computes it.
BoundCertificate bound_holds(const Progression& p, std::int64_t n, BoundKind kind);
BoundCertificate bound_holds(const Progression& p, std::int64_t n, BoundKind kind, const Integer& lcm);
BoundCertificate bound_holds(const GeometricShift& gs, std::int64_t n, BoundKind kind);

// lcm(u0, u0 + r, ..., u0 + n r) >= u0 (r + 1)^n. Indices start at u0 here.
BoundCertificate hong_feng_check(std::int64_t u0, std::int64_t r, std::int64_t n);

enum class Strength { T2Stronger, T3Stronger, Equal };

std::string_view to_string(Strength s);

// Compares the per-step bases (r+1)/(sqrt(r)(A+1)) and (r+1)/(2 sqrt(B))
// through 4B versus r(A+1)^2.
Strength strength_compare(const Progression& p);

// Display-only ratios: lcm against the conjectured ((r+1)/sqrt(r))^(n-1)
// q^((n-1)(n-4)/4) shape, and lcm against sqrt(u_1 ... u_n).
struct GrowthDiagnostics {
  double conjectured_ratio_log2 = 0.0;
  double sqrt_product_ratio_log2 = 0.0;
};

GrowthDiagnostics growth_diagnostics(const Progression& p, std::int64_t n);

// The three worked inequalities for 2^n - 1, 2^n + 1 and 3^n + 1.
enum class WorkedExample { MersenneMinusOne, TwoPowerPlusOne, ThreePowerPlusOne };

std::string_view to_string(WorkedExample which);

struct WorkedExampleCheck {
  WorkedExample which = WorkedExample::MersenneMinusOne;
  std::int64_t n = 0;
  Integer lcm;
  Integer lhs4;
  Integer rhs4;
  bool holds = false;
  // For 3^n + 1: lcm{3^i + 1} == 2 lcm{(3^i + 1)/2}. Always true otherwise.
  bool rewrite_holds = true;
  double bound_log2 = 0.0;
  double slack_log2 = 0.0;
};

WorkedExampleCheck check_worked_example(WorkedExample which, std::int64_t n);

}  // namespace qlcm
