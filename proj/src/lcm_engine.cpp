#include "qlcm/lcm_engine.hpp"

#include <string>

namespace qlcm {

namespace {

void lcm_into(Integer& acc, const Integer& value) {
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), value.get_mpz_t());
}

}  // namespace

Integer lcm_range(const Progression& p, std::int64_t k, std::int64_t n) {
  if (k < 1 || k > n) {
    throw DomainError("lcm_range: need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  Integer acc = term(p, k);
  for (std::int64_t i = k + 1; i <= n; ++i) lcm_into(acc, term(p, i));
  return acc;
}

PrefixLcmStream::PrefixLcmStream(Progression p) : p_(p) {
  step_.lcm = 1;
}

const PrefixLcmStep& PrefixLcmStream::next() {
  ++step_.n;
  // [n]_q = q [n-1]_q + 1, or n when q = 1.
  if (p_.q() == 1) {
    q_int_ = static_cast<long>(step_.n);
  } else {
    q_int_ *= static_cast<long>(p_.q());
    q_int_ += 1;
  }
  step_.term = q_int_ * static_cast<long>(p_.r()) + static_cast<long>(p_.u0());
  lcm_into(step_.lcm, step_.term);
  return step_;
}

PrefixLcmStream prefix_stream(const Progression& p) { return PrefixLcmStream(p); }

Verdict fundamental_theorem_check(std::span<const Integer> values) {
  if (values.empty()) throw DomainError("fundamental_theorem_check: empty family");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw DomainError("fundamental_theorem_check: zero entry");
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) {
        throw DegenerateDifference("fundamental_theorem_check: repeated value " + to_decimal(values[i]));
      }
    }
  }

  Integer lcm_values = 1;
  Integer product = 1;
  for (const Integer& v : values) {
    lcm_into(lcm_values, v);
    product *= v;
  }
  Integer lcm_products = 1;
  for (std::size_t j = 0; j < values.size(); ++j) {
    Integer inner = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != j) inner *= abs(values[i] - values[j]);
    }
    lcm_into(lcm_products, inner);
  }
  const Integer multiple = lcm_values * lcm_products;
  if (mpz_divisible_p(multiple.get_mpz_t(), product.get_mpz_t()) == 0) {
    return Verdict::fail("product " + to_decimal(product) + " does not divide " + to_decimal(multiple));
  }
  return Verdict::pass();
}

Verdict theorem1_check(const Progression& p, std::int64_t k, std::int64_t n) {
  if (k < 1 || k > n) {
    throw DomainError("theorem1_check: need 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  Integer lcm = 1;
  Integer product = 1;
  for (std::int64_t i = k; i <= n; ++i) {
    const Integer u = term(p, i);
    lcm_into(lcm, u);
    product *= u;
  }
  const Integer multiple = lcm * q_factorial(n - k, p.base());
  if (mpz_divisible_p(multiple.get_mpz_t(), product.get_mpz_t()) == 0) {
    return Verdict::fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": u_k..u_n = " +
                         to_decimal(product) + " does not divide lcm*[n-k]_q! = " + to_decimal(multiple));
  }
  return Verdict::pass();
}

}  // namespace qlcm
