#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/matrix.hpp"

namespace amalgam {

struct RelationCheck {
  std::string relation;
  bool holds = false;
};

/// Outcome of checking <b, c | b^2, c^3, (bc)^8, [b,(bc)^4], [c,(bc)^4]> on
/// concrete matrices.
struct PresentationResult {
  std::vector<RelationCheck> relations;
  /// |<b, c>|, or nullopt if the closure exceeded its cap.
  std::optional<std::size_t> closure_order;
  /// An element of order 2 outside the centre of <b, c>: the transposition
  /// preimage that distinguishes GL(2,3) from the other double cover of S4.
  std::optional<MatrixR> noncentral_involution;

  bool relations_hold() const;
  /// All relations hold and the group has order 48.
  bool ok() const;
};

PresentationResult verify_presentation_gl23(const MatrixR& b, const MatrixR& c);

}  // namespace amalgam
