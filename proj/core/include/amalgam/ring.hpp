#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace amalgam {

/// Element of Z[1/w], w = sqrt(-2), stored as (x + y*w) / 2^k.
///
/// Every element of the ring has this shape because 1/w = -w/2. The triple is
/// kept canonical: when k > 0, x and y are not both even. Two values are equal
/// exactly when their canonical triples are equal.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long v) : x_(v) {}  // NOLINT(google-explicit-constructor)

  /// Builds the canonical form of (x + y*w) / 2^k.
  static RingElem canonicalize(mpz_class x, mpz_class y, unsigned k);

  static RingElem omega() { return canonicalize(0, 1, 0); }
  static RingElem half() { return canonicalize(1, 0, 1); }

  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }
  unsigned k() const { return k_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_one() const { return x_ == 1 && y_ == 0 && k_ == 0; }
  bool is_rational() const { return y_ == 0; }

  RingElem operator-() const;
  friend RingElem operator+(const RingElem& u, const RingElem& v);
  friend RingElem operator-(const RingElem& u, const RingElem& v);
  friend RingElem operator*(const RingElem& u, const RingElem& v);
  RingElem& operator+=(const RingElem& v) { return *this = *this + v; }
  RingElem& operator-=(const RingElem& v) { return *this = *this - v; }
  RingElem& operator*=(const RingElem& v) { return *this = *this * v; }

  friend bool operator==(const RingElem& u, const RingElem& v) {
    return u.k_ == v.k_ && u.x_ == v.x_ && u.y_ == v.y_;
  }

  /// Total order on canonical triples; has no algebraic meaning.
  friend std::strong_ordering operator<=>(const RingElem& u, const RingElem& v);

  /// Serializes as "x,y,k".
  std::string to_string() const;
  /// Parses "x,y,k"; throws std::invalid_argument on malformed input.
  static RingElem parse(std::string_view text);

 private:
  mpz_class x_{0};
  mpz_class y_{0};
  unsigned k_{0};
};

RingElem conj(const RingElem& u);

/// u * conj(u) = (x^2 + 2y^2) / 4^k, always rational and non-negative.
RingElem norm(const RingElem& u);

}  // namespace amalgam
