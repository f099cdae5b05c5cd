#include "qlcm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qlcm/lcm_engine.hpp"

namespace qlcm {

namespace {

using u64 = std::uint64_t;

std::string describe(const Progression& p) {
  return "(q=" + std::to_string(p.q()) + ", r=" + std::to_string(p.r()) + ", u0=" + std::to_string(p.u0()) + ")";
}

Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer fourth_power(const Integer& x) { return power(x, 4); }

// (n-1)(n-4): four times the exponent of q in the quadratic-growth bounds.
std::int64_t quadratic_exponent(std::int64_t n) { return (n - 1) * (n - 4); }

// Moves q^(e) to whichever side keeps the exponent nonnegative.
void attach_q_power(Integer& lhs, Integer& rhs, std::int64_t q, std::int64_t e) {
  if (e >= 0) {
    rhs *= power(q, static_cast<u64>(e));
  } else {
    lhs *= power(q, static_cast<u64>(-e));
  }
}

struct ShapeInputs {
  std::int64_t q;
  std::int64_t r;
  Integer u1;
};

// lcm >= u1 ((r+1) / (sqrt(r)(A+1)))^m q^(e/4), A = an/ad:
//   L^4 r^(2m) (an+ad)^(4m) q^max(0,-e) >= u1^4 (r+1)^(4m) ad^(4m) q^max(0,e)
void sqrt_r_form(BoundCertificate& cert, const ShapeInputs& in, const Rational& A, const Integer& lcm) {
  const std::int64_t m = cert.n - 1;
  const std::int64_t e = quadratic_exponent(cert.n);
  const Integer an = A.get_num();
  const Integer ad = A.get_den();
  cert.lhs4 = fourth_power(lcm) * power(Integer(static_cast<long>(in.r)), static_cast<u64>(2 * m)) *
              power(Integer(an + ad), static_cast<u64>(4 * m));
  cert.rhs4 = fourth_power(in.u1) * power(in.r + 1, static_cast<u64>(4 * m)) * power(ad, static_cast<u64>(4 * m));
  attach_q_power(cert.lhs4, cert.rhs4, in.q, e);
  cert.bound_log2 = log2_of(in.u1) +
                    static_cast<double>(m) * (std::log2(static_cast<double>(in.r + 1)) -
                                              0.5 * std::log2(static_cast<double>(in.r)) - log2_of(Rational(A + 1))) +
                    static_cast<double>(e) / 4.0 * std::log2(static_cast<double>(in.q));
}

// lcm >= u1 ((r+1) / (2 sqrt(B)))^m q^(e/4), B = bn/bd:
//   L^4 16^m bn^(2m) q^max(0,-e) >= u1^4 (r+1)^(4m) bd^(2m) q^max(0,e)
void sqrt_b_form(BoundCertificate& cert, const ShapeInputs& in, const Rational& B, const Integer& lcm) {
  const std::int64_t m = cert.n - 1;
  const std::int64_t e = quadratic_exponent(cert.n);
  const Integer bn = B.get_num();
  const Integer bd = B.get_den();
  cert.lhs4 = fourth_power(lcm) * power(16, static_cast<u64>(m)) * power(bn, static_cast<u64>(2 * m));
  cert.rhs4 = fourth_power(in.u1) * power(in.r + 1, static_cast<u64>(4 * m)) * power(bd, static_cast<u64>(2 * m));
  attach_q_power(cert.lhs4, cert.rhs4, in.q, e);
  cert.bound_log2 = log2_of(in.u1) +
                    static_cast<double>(m) * (std::log2(static_cast<double>(in.r + 1)) - 1.0 - 0.5 * log2_of(B)) +
                    static_cast<double>(e) / 4.0 * std::log2(static_cast<double>(in.q));
}

void finish(BoundCertificate& cert, const Integer& lcm) {
  cert.holds = cert.lhs4 >= cert.rhs4;
  cert.slack_log2 = log2_of(lcm) - cert.bound_log2;
}

BoundCertificate start(BoundKind kind, const Progression& p, std::int64_t n) {
  if (n < 1) throw DomainError("bound_holds: n must be >= 1, got " + std::to_string(n));
  if (!applies(kind, p)) {
    throw DomainError("bound_holds: " + std::string(to_string(kind)) + " does not apply to " + describe(p));
  }
  BoundCertificate cert;
  cert.kind = kind;
  cert.n = n;
  cert.q = p.q();
  cert.r = p.r();
  cert.u0 = p.u0();
  return cert;
}

BoundCertificate corollary(const GeometricShift& gs, const Progression& p, std::int64_t n, BoundKind kind,
                           const Integer& lcm) {
  BoundCertificate cert = start(kind, p, n);
  const GeometricConstants c = geometric_constants(gs);
  // u1 = a q + b and r = a (q - 1).
  const ShapeInputs in{gs.q(), gs.a() * (gs.q() - 1), Integer(static_cast<long>(gs.a() * gs.q() + gs.b()))};
  if (kind == BoundKind::Corollary3) {
    sqrt_r_form(cert, in, c.a_prime, lcm);
  } else {
    sqrt_b_form(cert, in, c.b_prime, lcm);
  }
  finish(cert, lcm);
  return cert;
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Theorem2: return "Theorem2";
    case BoundKind::Theorem3: return "Theorem3";
    case BoundKind::Corollary3: return "Corollary3";
    case BoundKind::Corollary4: return "Corollary4";
    case BoundKind::HongFeng: return "HongFeng";
    case BoundKind::BouslaFarhi: return "BouslaFarhi";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind k : kAllBoundKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool applies(BoundKind kind, const Progression& p) {
  switch (kind) {
    case BoundKind::Theorem2:
    case BoundKind::Theorem3:
      return p.q() >= 2;
    case BoundKind::Corollary3:
    case BoundKind::Corollary4:
      return as_geometric(p).has_value();
    case BoundKind::HongFeng:
      return p.q() == 1;
    case BoundKind::BouslaFarhi:
      return p.q() >= 2 && p.r() == 1 && p.u0() == 0;
  }
  return false;
}

BoundConstants bound_constants(const Progression& p) {
  const Rational affine(static_cast<long>(p.u0() * (p.q() - 1) + 1 - p.r()));
  const Rational r(static_cast<long>(p.r()));
  BoundConstants out;
  out.A = max_of(Rational(0), Rational(affine / (2 * r)));
  out.B = max_of(r, Rational(affine / 2));
  out.A.canonicalize();
  out.B.canonicalize();
  return out;
}

GeometricConstants geometric_constants(std::int64_t a, std::int64_t b, std::int64_t q) {
  if (a < 1 || q < 2) throw DomainError("geometric_constants: need a >= 1 and q >= 2");
  const Rational ra(static_cast<long>(a));
  const Rational rb(static_cast<long>(b));
  const Rational qm1(static_cast<long>(q - 1));
  GeometricConstants out;
  out.a_prime = max_of(Rational(0), Rational(rb / (2 * ra) + 1 / (2 * ra * qm1)));
  out.b_prime = max_of(Rational(ra * qm1), Rational((rb * qm1 + 1) / 2));
  out.a_prime.canonicalize();
  out.b_prime.canonicalize();
  return out;
}

GeometricConstants geometric_constants(const GeometricShift& gs) { return geometric_constants(gs.a(), gs.b(), gs.q()); }

BoundCertificate bound_holds(const Progression& p, std::int64_t n, BoundKind kind) {
  if (n < 1) throw DomainError("bound_holds: n must be >= 1, got " + std::to_string(n));
  return bound_holds(p, n, kind, lcm_range(p, 1, n));
}

BoundCertificate bound_holds(const Progression& p, std::int64_t n, BoundKind kind, const Integer& lcm) {
  switch (kind) {
    case BoundKind::Theorem2: {
      BoundCertificate cert = start(kind, p, n);
      sqrt_r_form(cert, {p.q(), p.r(), term(p, 1)}, bound_constants(p).A, lcm);
      finish(cert, lcm);
      return cert;
    }
    case BoundKind::Theorem3: {
      BoundCertificate cert = start(kind, p, n);
      sqrt_b_form(cert, {p.q(), p.r(), term(p, 1)}, bound_constants(p).B, lcm);
      finish(cert, lcm);
      return cert;
    }
    case BoundKind::Corollary3:
    case BoundKind::Corollary4: {
      const auto gs = as_geometric(p);
      if (!gs) {
        throw DomainError("bound_holds: " + std::string(to_string(kind)) + " does not apply to " + describe(p));
      }
      return corollary(*gs, p, n, kind, lcm);
    }
    case BoundKind::HongFeng: {
      // Same inequality as hong_feng_check, started at u_1 with n - 1 steps.
      BoundCertificate cert = start(kind, p, n);
      const Integer bound = term(p, 1) * power(p.r() + 1, static_cast<u64>(n - 1));
      cert.lhs4 = fourth_power(lcm);
      cert.rhs4 = fourth_power(bound);
      cert.bound_log2 = log2_of(bound);
      finish(cert, lcm);
      return cert;
    }
    case BoundKind::BouslaFarhi: {
      // lcm([1]_q..[n]_q) >= q^(n^2/4 - n/2 - 1); four times the exponent is n^2 - 2n - 4.
      BoundCertificate cert = start(kind, p, n);
      const std::int64_t e = n * n - 2 * n - 4;
      cert.lhs4 = fourth_power(lcm);
      cert.rhs4 = 1;
      attach_q_power(cert.lhs4, cert.rhs4, p.q(), e);
      cert.bound_log2 = static_cast<double>(e) / 4.0 * std::log2(static_cast<double>(p.q()));
      finish(cert, lcm);
      return cert;
    }
  }
  throw DomainError("bound_holds: unknown bound kind");
}

BoundCertificate bound_holds(const GeometricShift& gs, std::int64_t n, BoundKind kind) {
  if (kind != BoundKind::Corollary3 && kind != BoundKind::Corollary4) {
    throw DomainError("bound_holds: a geometric shift takes Corollary3 or Corollary4, got " +
                      std::string(to_string(kind)));
  }
  if (n < 1) throw DomainError("bound_holds: n must be >= 1, got " + std::to_string(n));
  const Progression p = from_geometric(gs);
  return corollary(gs, p, n, kind, lcm_range(p, 1, n));
}

BoundCertificate hong_feng_check(std::int64_t u0, std::int64_t r, std::int64_t n) {
  if (u0 < 1 || r < 1 || n < 0) throw DomainError("hong_feng_check: need u0 >= 1, r >= 1, n >= 0");
  if (std::gcd(u0, r) != 1) {
    throw DomainError("hong_feng_check: gcd(u0, r) != 1 (u0=" + std::to_string(u0) + ", r=" + std::to_string(r) + ")");
  }
  Integer lcm = static_cast<long>(u0);
  for (std::int64_t i = 1; i <= n; ++i) {
    const Integer v = static_cast<long>(u0 + i * r);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_mpz_t());
  }
  const Integer bound = Integer(static_cast<long>(u0)) * power(r + 1, static_cast<u64>(n));
  BoundCertificate cert;
  cert.kind = BoundKind::HongFeng;
  cert.n = n;
  cert.q = 1;
  cert.r = r;
  cert.u0 = u0;
  cert.lhs4 = fourth_power(lcm);
  cert.rhs4 = fourth_power(bound);
  cert.bound_log2 = log2_of(bound);
  finish(cert, lcm);
  return cert;
}

std::string_view to_string(Strength s) {
  switch (s) {
    case Strength::T2Stronger: return "T2Stronger";
    case Strength::T3Stronger: return "T3Stronger";
    case Strength::Equal: return "Equal";
  }
  return "?";
}

Strength strength_compare(const Progression& p) {
  if (p.q() < 2) throw UnsupportedBase("strength_compare: requires q >= 2 " + describe(p));
  const BoundConstants c = bound_constants(p);
  const Rational four_b = 4 * c.B;
  const Rational a1 = c.A + 1;
  const Rational r_a1_sq = Rational(static_cast<long>(p.r())) * a1 * a1;
  if (four_b > r_a1_sq) return Strength::T2Stronger;
  if (four_b < r_a1_sq) return Strength::T3Stronger;
  return Strength::Equal;
}

GrowthDiagnostics growth_diagnostics(const Progression& p, std::int64_t n) {
  if (n < 1) throw DomainError("growth_diagnostics: n must be >= 1");
  PrefixLcmStream stream(p);
  double log_product = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) log_product += log2_of(stream.next().term);
  const double log_lcm = log2_of(stream.current().lcm);
  const double m = static_cast<double>(n - 1);
  const double e = static_cast<double>(quadratic_exponent(n));
  const double shape = m * (std::log2(static_cast<double>(p.r() + 1)) - 0.5 * std::log2(static_cast<double>(p.r()))) +
                       e / 4.0 * std::log2(static_cast<double>(p.q()));
  return {log_lcm - shape, log_lcm - 0.5 * log_product};
}

std::string_view to_string(WorkedExample which) {
  switch (which) {
    case WorkedExample::MersenneMinusOne: return "2^n-1";
    case WorkedExample::TwoPowerPlusOne: return "2^n+1";
    case WorkedExample::ThreePowerPlusOne: return "3^n+1";
  }
  return "?";
}

WorkedExampleCheck check_worked_example(WorkedExample which, std::int64_t n) {
  if (n < 1) throw DomainError("check_worked_example: n must be >= 1");
  WorkedExampleCheck out;
  out.which = which;
  out.n = n;
  const std::int64_t e = quadratic_exponent(n);
  switch (which) {
    case WorkedExample::MersenneMinusOne: {
      // lcm{2^i - 1} >= 2^(n(n-1)/4)
      out.lcm = lcm_range(make_progression(2, 1, 0), 1, n);
      out.lhs4 = fourth_power(out.lcm);
      out.rhs4 = power(2, static_cast<u64>(n * (n - 1)));
      out.bound_log2 = static_cast<double>(n * (n - 1)) / 4.0;
      break;
    }
    case WorkedExample::TwoPowerPlusOne: {
      // lcm{2^i + 1} >= 3 * 2^((n-1)(n-4)/4)
      out.lcm = lcm_range(from_geometric(make_geometric_shift(1, 1, 2)), 1, n);
      out.lhs4 = fourth_power(out.lcm);
      out.rhs4 = 81;
      attach_q_power(out.lhs4, out.rhs4, 2, e);
      out.bound_log2 = std::log2(3.0) + static_cast<double>(e) / 4.0;
      break;
    }
    case WorkedExample::ThreePowerPlusOne: {
      // lcm{3^i + 1} = 2 lcm{[i]_3 + 1} >= 4 * 3^((n-1)(n-4)/4)
      Integer direct = 1;
      for (std::int64_t i = 1; i <= n; ++i) {
        const Integer v = power(3, static_cast<u64>(i)) + 1;
        mpz_lcm(direct.get_mpz_t(), direct.get_mpz_t(), v.get_mpz_t());
      }
      const Integer halved = lcm_range(make_progression(3, 1, 1), 1, n);
      out.rewrite_holds = direct == 2 * halved;
      out.lcm = direct;
      out.lhs4 = fourth_power(out.lcm);
      out.rhs4 = 256;
      attach_q_power(out.lhs4, out.rhs4, 3, e);
      out.bound_log2 = 2.0 + static_cast<double>(e) / 4.0 * std::log2(3.0);
      break;
    }
  }
  out.holds = out.rewrite_holds && out.lhs4 >= out.rhs4;
  out.slack_log2 = log2_of(out.lcm) - out.bound_log2;
  return out;
}

}  // namespace qlcm
