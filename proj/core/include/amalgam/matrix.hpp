#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

inline constexpr std::size_t kDim = 5;

/// 5x5 matrix over Z[1/sqrt(-2)].
class MatrixR {
 public:
  using Row = std::array<RingElem, kDim>;

  MatrixR() = default;
  explicit MatrixR(std::array<Row, kDim> rows) : rows_(std::move(rows)) {}

  static MatrixR identity();
  static MatrixR scalar(const RingElem& s);

  RingElem& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const RingElem& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  friend MatrixR operator*(const MatrixR& m, const MatrixR& n);
  friend MatrixR operator+(const MatrixR& m, const MatrixR& n);
  friend bool operator==(const MatrixR& m, const MatrixR& n) = default;

  bool is_identity() const { return *this == identity(); }

  /// Row-major "x,y,k" triples joined by '|'; injective on values.
  std::string encode() const;

 private:
  std::array<Row, kDim> rows_{};
};

/// Conjugate transpose.
MatrixR adjoint(const MatrixR& m);

/// m * adjoint(m) == I.
bool is_unitary(const MatrixR& m);

/// Determinant by full permutation expansion (division free).
RingElem det(const MatrixR& m);

MatrixR power(const MatrixR& m, unsigned long e);

/// Inverse of a unitary matrix, taken as its adjoint. Throws
/// std::domain_error if m is not unitary.
MatrixR unitary_inverse(const MatrixR& m);

class OrderExceedsCap : public std::runtime_error {
 public:
  explicit OrderExceedsCap(unsigned long cap)
      : std::runtime_error("element order exceeds cap " + std::to_string(cap)), cap_(cap) {}
  unsigned long cap() const { return cap_; }

 private:
  unsigned long cap_;
};

inline constexpr unsigned long kDefaultOrderCap = 64;

/// Least n >= 1 with m^n = I; throws OrderExceedsCap when n > cap.
unsigned long element_order(const MatrixR& m, unsigned long cap = kDefaultOrderCap);

/// Monic characteristic polynomial det(xI - m), coefficients ascending.
struct CharPoly {
  std::array<RingElem, kDim + 1> coeffs{};

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
  std::string to_string() const;
};

/// Berkowitz's division-free algorithm; valid over any commutative ring.
CharPoly char_poly(const MatrixR& m);

/// Sum of coeffs[i] * m^i.
MatrixR evaluate(const CharPoly& p, const MatrixR& m);

class NonUnitConstantTerm : public std::domain_error {
 public:
  NonUnitConstantTerm() : std::domain_error("constant term of characteristic polynomial is not +-1") {}
};

/// True iff x^5 p(1/x) = +-p(x). A false result shows the root multiset is not
/// closed under inversion, so the matrix preserves no non-degenerate symmetric
/// bilinear form.
bool is_self_reciprocal(const CharPoly& p);

/// Fixture block: five lines, entries as "x,y,k" separated by ", ".
std::string to_fixture_block(const MatrixR& m);
MatrixR parse_fixture_block(const std::vector<std::string>& lines);

}  // namespace amalgam
