#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace amalgam {

/// Largest supported characteristic (exclusive).
inline constexpr std::uint32_t kMaxPrime = 1u << 20;

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

enum class Residuosity { square, nonsquare };

/// Quadratic character of -2 modulo an odd prime via Euler's criterion.
Residuosity legendre_minus_two(std::uint32_t p);

class NotAResidue : public std::domain_error {
 public:
  NotAResidue(std::int64_t a, std::uint32_t p)
      : std::domain_error(std::to_string(a) + " is not a square mod " + std::to_string(p)) {}
};

class NotOddPrime : public std::invalid_argument {
 public:
  explicit NotOddPrime(std::uint64_t p)
      : std::invalid_argument(std::to_string(p) + " is not an odd prime below 2^20") {}
};

/// Square root of a mod p, canonicalized to min(r, p - r).
std::uint32_t sqrt_mod(std::int64_t a, std::uint32_t p);

/// General Tonelli-Shanks path (no p = 3 mod 4 shortcut), same canonical choice.
std::uint32_t sqrt_mod_tonelli_shanks(std::int64_t a, std::uint32_t p);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("inverse of zero in finite field") {}
};

/// Element code: c0 + p * c1, representing c0 + c1 * t. Prime-field elements
/// have c1 = 0, so their codes are just residues.
using FieldElem = std::uint32_t;

/// GF(p), or GF(p^2) = GF(p)[t]/(t^2 + 2) when -2 is a non-square mod p.
/// Copies share lookup tables; small fields (q <= 1024) use full add/mul
/// tables.
class Field {
 public:
  static Field prime(std::uint32_t p);
  /// Requires legendre_minus_two(p) == nonsquare.
  static Field quadratic(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t order() const { return q_; }
  bool is_extension() const { return ext_; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }
  /// The adjoined root t of t^2 = -2; throws std::logic_error in the prime case.
  FieldElem t() const;

  FieldElem make(std::uint32_t c0, std::uint32_t c1 = 0) const;
  FieldElem from_int(std::int64_t v) const;
  std::uint32_t c0(FieldElem x) const { return x % p_; }
  std::uint32_t c1(FieldElem x) const { return x / p_; }

  FieldElem add(FieldElem x, FieldElem y) const {
    return tables_ ? tables_->add[x * q_ + y] : add_slow(x, y);
  }
  FieldElem mul(FieldElem x, FieldElem y) const {
    return tables_ ? tables_->mul[x * q_ + y] : mul_slow(x, y);
  }
  FieldElem neg(FieldElem x) const;
  FieldElem sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }
  FieldElem inv(FieldElem x) const;
  FieldElem pow(FieldElem x, std::uint64_t e) const;
  /// x -> x^p; the identity on GF(p), t -> -t on GF(p^2).
  FieldElem frobenius(FieldElem x) const;

  std::string to_string(FieldElem x) const;

  friend bool operator==(const Field& u, const Field& v) {
    return u.p_ == v.p_ && u.ext_ == v.ext_;
  }

 private:
  struct Tables {
    std::vector<FieldElem> add;
    std::vector<FieldElem> mul;
    std::vector<FieldElem> inv;
  };

  Field(std::uint32_t p, bool ext);
  FieldElem add_slow(FieldElem x, FieldElem y) const;
  FieldElem mul_slow(FieldElem x, FieldElem y) const;
  FieldElem inv_slow(FieldElem x) const;

  std::uint32_t p_;
  std::uint32_t q_;
  bool ext_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace amalgam
