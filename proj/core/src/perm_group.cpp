#include "amalgam/perm_group.hpp"

#include <numeric>
#include <stdexcept>

namespace amalgam {

Perm identity_perm(std::uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

Perm inverse(const Perm& g) {
  Perm r(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) r[g[x]] = x;
  return r;
}

bool is_identity(const Perm& g) {
  for (std::uint32_t x = 0; x < g.size(); ++x)
    if (g[x] != x) return false;
  return true;
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_) {
    if (g.size() != degree_) throw std::invalid_argument("generator has wrong degree");
    std::vector<bool> hit(degree_, false);
    for (std::uint32_t x : g) {
      if (x >= degree_ || hit[x]) throw std::invalid_argument("generator is not a bijection");
      hit[x] = true;
    }
  }
  build();
}

void PermGroup::rebuild_levels() {
  levels_.assign(degree_, Level{});
  for (std::uint32_t i = 0; i < degree_; ++i) {
    Level& level = levels_[i];
    for (std::uint32_t s = 0; s < strong_.size(); ++s) {
      bool fixes = true;
      for (std::uint32_t b = 0; b < i && fixes; ++b) fixes = strong_[s][b] == b;
      if (fixes) level.gens.push_back(s);
    }
    level.in_orbit.assign(degree_, false);
    level.transversal.assign(degree_, Perm{});
    level.in_orbit[i] = true;
    level.transversal[i] = identity_perm(degree_);
    level.orbit = {i};
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      const std::uint32_t pt = level.orbit[head];
      for (std::uint32_t s : level.gens) {
        const std::uint32_t img = strong_[s][pt];
        if (level.in_orbit[img]) continue;
        level.in_orbit[img] = true;
        level.transversal[img] = compose(level.transversal[pt], strong_[s]);
        level.orbit.push_back(img);
      }
    }
  }
}

Perm PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const std::uint32_t pt = g[i];
    if (!levels_[i].in_orbit[pt]) return g;
    g = compose(g, inverse(levels_[i].transversal[pt]));
  }
  return g;
}

void PermGroup::build() {
  strong_.clear();
  for (const Perm& g : generators_)
    if (!is_identity(g)) strong_.push_back(g);
  rebuild_levels();

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      const Level& level = levels_[i];
      for (std::size_t k = 0; k < level.orbit.size() && !changed; ++k) {
        const std::uint32_t pt = level.orbit[k];
        for (std::uint32_t s : level.gens) {
          const std::uint32_t img = strong_[s][pt];
          Perm schreier = compose(compose(level.transversal[pt], strong_[s]), inverse(level.transversal[img]));
          Perm residue = sift(std::move(schreier), i + 1);
          if (!is_identity(residue)) {
            strong_.push_back(std::move(residue));
            rebuild_levels();
            changed = true;
            break;
          }
        }
      }
    }
  }
}

mpz_class PermGroup::order() const {
  mpz_class n = 1;
  for (const Level& level : levels_) n *= static_cast<unsigned long>(level.orbit.size());
  return n;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.size() != degree_) return false;
  return is_identity(sift(g, 0));
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Perm& g : generators_) {
      const std::uint32_t img = g[out[head]];
      if (!seen[img]) {
        seen[img] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> PermGroup::transitivity_tower() const {
  std::vector<std::uint64_t> tower;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    tower.push_back(levels_[i].orbit.size());
    if (i + 1 >= levels_.size() || levels_[i + 1].gens.empty()) break;
  }
  if (tower.empty()) tower.push_back(1);
  return tower;
}

}  // namespace amalgam
