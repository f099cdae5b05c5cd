#include "qlcm/exact.hpp"

#include <cmath>

namespace qlcm {

Integer power(const Integer& base, std::uint64_t exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer power(std::int64_t base, std::uint64_t exponent) {
  return power(Integer(static_cast<long>(base)), exponent);
}

Rational rational_power(std::int64_t base, std::int64_t exponent) {
  if (base == 0) throw DomainError("rational_power: zero base");
  if (exponent >= 0) return Rational(power(base, static_cast<std::uint64_t>(exponent)));
  return make_rational(Integer(1), power(base, static_cast<std::uint64_t>(-exponent)));
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("make_rational: zero denominator");
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

std::size_t bit_length(const Integer& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

double log2_of(const Integer& value) {
  if (value <= 0) throw DomainError("log2_of: nonpositive argument");
  long exp = 0;
  const double mantissa = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exp);
}

double log2_of(const Rational& value) {
  if (value <= 0) throw DomainError("log2_of: nonpositive argument");
  return log2_of(Integer(value.get_num())) - log2_of(Integer(value.get_den()));
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace qlcm
