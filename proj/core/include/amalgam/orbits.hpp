#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "amalgam/fq_matrix.hpp"
#include "amalgam/perm_group.hpp"
#include "amalgam/point_space.hpp"

namespace amalgam {

/// The functions below use the right action on row vectors, v -> v g. Points
/// of the column space (g acting by v -> g v) are reached by passing
/// column_action(gens); the row action itself is the action on hyperplanes.
std::vector<FqMatrix> column_action(const std::vector<FqMatrix>& gens);

/// Orbits of <gens> on the projective points of GF(q)^5. Each orbit lists
/// point indices in ascending order; orbits are ordered by their least point.
std::vector<std::vector<Point>> projective_orbits(const Field& F, const std::vector<FqMatrix>& gens);

/// Orbit sizes, ascending.
std::vector<std::uint64_t> orbit_partition(const Field& F, const std::vector<FqMatrix>& gens);

class OrbitNotInvariant : public std::invalid_argument {
 public:
  OrbitNotInvariant() : std::invalid_argument("point set is not invariant under the generators") {}
};

/// Permutation action of each generator on an invariant set of projective
/// points; position i of the result stands for the i-th smallest point index.
PermGroup perm_image(const Field& F, const std::vector<FqMatrix>& gens, std::vector<Point> orbit);

}  // namespace amalgam
