#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlcm {

// Arbitrary-precision values. Every number-theoretic quantity goes through
// these; doubles appear only in display columns.
using Integer = mpz_class;
using Rational = mpq_class;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The gcd hypotheses of the progression (or of a geometric shift) failed.
class CoprimalityError : public DomainError {
 public:
  enum class Pair { U0_R, U1_Q, AQ_B, AB_QM1 };

  CoprimalityError(Pair pair, const std::string& what) : DomainError(what), pair_(pair) {}

  Pair pair() const noexcept { return pair_; }

 private:
  Pair pair_;
};

// Raised by the threshold machinery (f, k_n, l_n, strength comparison),
// which is only defined for q >= 2.
class UnsupportedBase : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two equal values in a family handed to the fundamental divisibility check.
class DegenerateDifference : public DomainError {
 public:
  using DomainError::DomainError;
};

Integer power(const Integer& base, std::uint64_t exponent);
Integer power(std::int64_t base, std::uint64_t exponent);

// base^exponent for any integer exponent; base must be nonzero.
Rational rational_power(std::int64_t base, std::int64_t exponent);

Rational make_rational(const Integer& numerator, const Integer& denominator);

std::size_t bit_length(const Integer& value);

// Display-precision logarithms; value must be positive.
double log2_of(const Integer& value);
double log2_of(const Rational& value);

std::string to_decimal(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace qlcm
