#include "qlcm/qcalc.hpp"

#include <stdexcept>
#include <string>

namespace qlcm {

QBase::QBase(std::int64_t q) : q_(q) {
  if (q < 1) throw DomainError("q must be a positive integer, got " + std::to_string(q));
}

Integer q_int(std::int64_t n, QBase q) {
  if (n < 0) throw DomainError("q_int: negative index " + std::to_string(n));
  if (q.is_one()) return Integer(static_cast<long>(n));
  // Horner: [n]_q = q [n-1]_q + 1.
  Integer acc = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    acc *= static_cast<long>(q.value());
    acc += 1;
  }
  return acc;
}

Integer q_factorial(std::int64_t n, QBase q) {
  if (n < 0) throw DomainError("q_factorial: negative index " + std::to_string(n));
  Integer acc = 1;
  Integer qi = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    qi *= static_cast<long>(q.value());
    qi += 1;
    if (q.is_one()) qi = static_cast<long>(i);
    acc *= qi;
  }
  return acc;
}

Integer q_binomial(std::int64_t n, std::int64_t k, QBase q) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  const Integer num = q_factorial(n, q);
  const Integer den = q_factorial(k, q) * q_factorial(n - k, q);
  Integer quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (remainder != 0) {
    throw std::logic_error("q_binomial: [a]_q![b]_q! does not divide [a+b]_q! at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
  }
  return quotient;
}

}  // namespace qlcm
