#pragma once

#include <array>
#include <cstdint>

#include "amalgam/finite_field.hpp"
#include "amalgam/fq_matrix.hpp"

namespace amalgam {

enum class ActionDomain { vectors, projective };

using Point = std::uint32_t;

/// Dense indexing of the nonzero vectors of GF(q)^5, or of its projective
/// points, for the right action v -> v g.
///
/// Vectors: index = sum v_i q^i (index 0 is the zero vector and never used).
/// Projective: the representative has first nonzero coordinate 1; points are
/// grouped by the position j of that coordinate, the q^(4-j) points with a
/// given j numbered by their trailing coordinates.
class PointSpace {
 public:
  PointSpace(Field field, ActionDomain domain);

  const Field& field() const { return field_; }
  ActionDomain domain() const { return domain_; }

  /// Number of index slots: q^5 for vectors, (q^5 - 1)/(q - 1) for points.
  std::uint64_t slots() const { return slots_; }
  /// Number of actual points (slots minus the zero vector for vectors).
  std::uint64_t point_count() const;
  /// Index of the first real point.
  Point first() const { return domain_ == ActionDomain::vectors ? 1 : 0; }

  Point index(const FqVector& v) const;
  FqVector vector(Point i) const;
  Point image(Point i, const FqMatrix& g) const { return index(act(field_, vector(i), g)); }
  /// Point spanned by the i-th standard basis vector.
  Point basis_point(std::size_t i) const;

 private:
  Field field_;
  ActionDomain domain_;
  std::uint64_t q_;
  std::uint64_t slots_;
  std::array<std::uint64_t, kDim + 1> offsets_{};
};

}  // namespace amalgam
