#pragma once

#include <cstdint>
#include <span>

#include "qlcm/exact.hpp"
#include "qlcm/progression.hpp"
#include "qlcm/verdict.hpp"

namespace qlcm {

// lcm(u_k, ..., u_n) for 1 <= k <= n, by a gcd-reduced left fold.
Integer lcm_range(const Progression& p, std::int64_t k, std::int64_t n);

struct PrefixLcmStep {
  std::int64_t n = 0;
  Integer term;
  Integer lcm;
};

// Yields (n, u_n, lcm(u_1..u_n)) for n = 1, 2, ...; single consumer.
class PrefixLcmStream {
 public:
  explicit PrefixLcmStream(Progression p);

  const PrefixLcmStep& next();
  const PrefixLcmStep& current() const noexcept { return step_; }

 private:
  Progression p_;
  Integer q_int_;
  PrefixLcmStep step_;
};

PrefixLcmStream prefix_stream(const Progression& p);

// Checks that lcm{u_i} * lcm_j prod_{i != j} |u_i - u_j| is a multiple of
// prod u_i. Zero entries raise DomainError, repeated entries raise
// DegenerateDifference.
Verdict fundamental_theorem_check(std::span<const Integer> values);

// Checks that lcm(u_k..u_n) * [n-k]_q! is a multiple of u_k ... u_n.
Verdict theorem1_check(const Progression& p, std::int64_t k, std::int64_t n);

}  // namespace qlcm
