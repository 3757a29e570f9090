#include "amalgam/presentation.hpp"

#include <algorithm>

#include "amalgam/closure.hpp"

namespace amalgam {

namespace {

// [x, y] = x^-1 y^-1 x y; inverses of unitary matrices are adjoints.
MatrixR commutator(const MatrixR& x, const MatrixR& y) {
  return adjoint(x) * adjoint(y) * x * y;
}

}  // namespace

bool PresentationResult::relations_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

bool PresentationResult::ok() const {
  return relations_hold() && closure_order == 48 && noncentral_involution.has_value();
}

PresentationResult verify_presentation_gl23(const MatrixR& b, const MatrixR& c) {
  PresentationResult result;
  const MatrixR bc = b * c;
  const MatrixR z = power(bc, 4);
  const bool unitary = is_unitary(b) && is_unitary(c);

  result.relations.push_back({"b^2 = 1", power(b, 2).is_identity()});
  result.relations.push_back({"c^3 = 1", power(c, 3).is_identity()});
  result.relations.push_back({"(bc)^8 = 1", power(bc, 8).is_identity()});
  // Commutators need inverses; without unitarity the adjoint is not one.
  result.relations.push_back({"[b,(bc)^4] = 1", unitary && commutator(b, z).is_identity()});
  result.relations.push_back({"[c,(bc)^4] = 1", unitary && commutator(c, z).is_identity()});

  try {
    const ExactClosure h = bfs_closure({b, c}, 1000);
    result.closure_order = h.size();
    for (const MatrixR& x : h.elements()) {
      if (x.is_identity() || !power(x, 2).is_identity()) continue;
      const bool central = x * b == b * x && x * c == c * x;
      if (!central) {
        result.noncentral_involution = x;
        break;
      }
    }
  } catch (const ClosureExceedsCap&) {
    result.closure_order.reset();
  }
  return result;
}

}  // namespace amalgam
