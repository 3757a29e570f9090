#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "amalgam/finite_field.hpp"
#include "amalgam/fq_matrix.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// Which of the two prime ideals above a split prime: `plus` sends w to the
/// least root r of -2 mod p, `minus` to p - r. At p = 3, `minus` is the ideal
/// (1 + w) (w -> 2) and `plus` is (1 - w) (w -> 1).
enum class IdealSign { plus, minus };

enum class PrimeKind { split, inert };

/// Reduction map Z[1/w] -> GF(p) (split) or GF(p^2) (inert).
class ReductionContext {
 public:
  /// Throws NotOddPrime. The sign is ignored for inert primes.
  static ReductionContext make(std::uint32_t p, IdealSign sign = IdealSign::plus);

  std::uint32_t p() const { return field_.characteristic(); }
  PrimeKind kind() const { return kind_; }
  IdealSign sign() const { return sign_; }
  const Field& field() const { return field_; }
  /// Image of w.
  FieldElem omega_image() const { return omega_; }

  FieldElem reduce(const RingElem& u) const;
  FqMatrix reduce(const MatrixR& m) const;

  std::string describe() const;

 private:
  ReductionContext(Field f, PrimeKind kind, IdealSign sign, FieldElem omega);

  Field field_;
  PrimeKind kind_;
  IdealSign sign_;
  FieldElem omega_;
  FieldElem inv2_;
};

class WrongContextKind : public std::logic_error {
 public:
  WrongContextKind() : std::logic_error("unitary form check requires an inert prime") {}
};

/// transpose(frobenius(g)) * g == I, the condition for g to preserve the
/// standard Hermitian form over GF(p^2). Throws WrongContextKind when split.
bool check_unitary_form(const FqMatrix& g, const ReductionContext& ctx);

}  // namespace amalgam
