#include "amalgam/orbits.hpp"

#include <algorithm>
#include <unordered_map>

namespace amalgam {

std::vector<FqMatrix> column_action(const std::vector<FqMatrix>& gens) {
  std::vector<FqMatrix> out;
  out.reserve(gens.size());
  for (const FqMatrix& g : gens) out.push_back(transpose(g));
  return out;
}

std::vector<std::vector<Point>> projective_orbits(const Field& F, const std::vector<FqMatrix>& gens) {
  const PointSpace space(F, ActionDomain::projective);
  const std::uint64_t n = space.slots();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> orbits;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const FqVector v = space.vector(orbit[head]);
      for (const FqMatrix& g : gens) {
        const Point img = space.index(act(F, v, g));
        if (!seen[img]) {
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::uint64_t> orbit_partition(const Field& F, const std::vector<FqMatrix>& gens) {
  std::vector<std::uint64_t> sizes;
  for (const auto& orbit : projective_orbits(F, gens)) sizes.push_back(orbit.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

PermGroup perm_image(const Field& F, const std::vector<FqMatrix>& gens, std::vector<Point> orbit) {
  const PointSpace space(F, ActionDomain::projective);
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  std::unordered_map<Point, std::uint32_t> position;
  for (std::uint32_t i = 0; i < orbit.size(); ++i) position.emplace(orbit[i], i);

  std::vector<Perm> perms;
  for (const FqMatrix& g : gens) {
    Perm perm(orbit.size());
    for (std::uint32_t i = 0; i < orbit.size(); ++i) {
      auto it = position.find(space.image(orbit[i], g));
      if (it == position.end()) throw OrbitNotInvariant();
      perm[i] = it->second;
    }
    perms.push_back(std::move(perm));
  }
  return PermGroup(static_cast<std::uint32_t>(orbit.size()), std::move(perms));
}

}  // namespace amalgam
