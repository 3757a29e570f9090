#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "amalgam/finite_field.hpp"
#include "amalgam/matrix.hpp"

namespace amalgam {

using FqVector = std::array<FieldElem, kDim>;

/// Dense 5x5 matrix of field element codes, row-major. Arithmetic needs the
/// owning Field, so operations are free functions taking it explicitly.
struct FqMatrix {
  std::array<FieldElem, kDim * kDim> e{};

  FieldElem& operator()(std::size_t i, std::size_t j) { return e[i * kDim + j]; }
  FieldElem operator()(std::size_t i, std::size_t j) const { return e[i * kDim + j]; }

  static FqMatrix identity();
  bool is_identity() const { return *this == identity(); }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const noexcept;
};

FqMatrix mul(const Field& F, const FqMatrix& m, const FqMatrix& n);
FqMatrix scale(const Field& F, const FqMatrix& m, FieldElem s);
FqMatrix transpose(const FqMatrix& m);
FqMatrix frobenius(const Field& F, const FqMatrix& m);
FqMatrix power(const Field& F, const FqMatrix& m, unsigned long e);
FieldElem det(const Field& F, const FqMatrix& m);
/// Gauss-Jordan inverse; throws DivisionByZero for singular input.
FqMatrix inverse(const Field& F, const FqMatrix& m);
/// Least n with m^n = I, or 0 if none up to cap.
unsigned long order(const Field& F, const FqMatrix& m, unsigned long cap);
bool is_scalar(const FqMatrix& m);
/// transpose(frobenius(g)) * g == I: g preserves the standard Hermitian form
/// (the standard symmetric form over a prime field).
bool preserves_standard_form(const Field& F, const FqMatrix& g);

/// Row vector times matrix: the right action v -> v m.
inline FqVector act(const Field& F, const FqVector& v, const FqMatrix& m) {
  FqVector r{};
  for (std::size_t j = 0; j < kDim; ++j) {
    FieldElem acc = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
      if (v[i] != 0) acc = F.add(acc, F.mul(v[i], m(i, j)));
    }
    r[j] = acc;
  }
  return r;
}

std::string to_string(const Field& F, const FqMatrix& m);

}  // namespace amalgam
