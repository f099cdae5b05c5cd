#pragma once

#include <cstdint>

#include "qlcm/exact.hpp"

namespace qlcm {

// The base q of the q-analogs; any positive integer.
class QBase {
 public:
  explicit QBase(std::int64_t q);

  std::int64_t value() const noexcept { return q_; }
  bool is_one() const noexcept { return q_ == 1; }

  friend bool operator==(QBase, QBase) = default;

 private:
  std::int64_t q_;
};

// [n]_q = 1 + q + ... + q^(n-1); equals n at q = 1.
Integer q_int(std::int64_t n, QBase q);

// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
Integer q_factorial(std::int64_t n, QBase q);

// Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!). The quotient is checked to be
// exact; a nonzero remainder is reported as std::logic_error.
Integer q_binomial(std::int64_t n, std::int64_t k, QBase q);

}  // namespace qlcm
