#include "amalgam/order_formula.hpp"

#include <stdexcept>


namespace amalgam {

namespace {

bool is_odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  std::uint64_t p = 3;
  while (q % p != 0) p += 2;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

std::string GroupOrderTarget::name() const {
  return std::string(family == GroupFamily::SL ? "SL" : "SU") + "(" + std::to_string(n) + "," +
         std::to_string(q) + ")";
}

GroupOrderTarget group_order_formula(GroupFamily family, unsigned n, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (!is_odd_prime_power(q)) throw std::invalid_argument(std::to_string(q) + " is not an odd prime power");
  const mpz_class Q(std::to_string(q));
  mpz_class value;
  mpz_pow_ui(value.get_mpz_t(), Q.get_mpz_t(), n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) {
    mpz_class qi;
    mpz_pow_ui(qi.get_mpz_t(), Q.get_mpz_t(), i);
    const bool plus = family == GroupFamily::SU && i % 2 == 1;
    value *= plus ? mpz_class(qi + 1) : mpz_class(qi - 1);
  }
  return GroupOrderTarget{family, n, q, value};
}

}  // namespace amalgam
