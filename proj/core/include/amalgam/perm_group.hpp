#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace amalgam {

/// Permutation of {0, ..., n-1}; perm[x] is the image of x.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::uint32_t degree);
/// Apply g, then h.
Perm compose(const Perm& g, const Perm& h);
Perm inverse(const Perm& g);
bool is_identity(const Perm& g);

/// Permutation group given by generators, with a stabilizer chain over the
/// full base 0, 1, ..., n-1 built by deterministic Schreier-Sims.
class PermGroup {
 public:
  /// Throws std::invalid_argument if a generator is not a bijection of [0, degree).
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  mpz_class order() const;
  bool contains(const Perm& g) const;
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;

  /// Orbit length of point i under the pointwise stabilizer of 0..i-1, for
  /// i = 0, 1, ... up to the first i whose stabilizer G_{0..i} is trivial.
  /// A sharply k-transitive group of degree n gives [n, n-1, ..., n-k+1].
  std::vector<std::uint64_t> transitivity_tower() const;

 private:
  struct Level {
    std::vector<std::uint32_t> gens;      // indices into strong_
    std::vector<bool> in_orbit;
    std::vector<Perm> transversal;        // u with u[level] = point
    std::vector<std::uint32_t> orbit;
  };

  void build();
  void rebuild_levels();
  // Strips g through levels from..n-1; returns the residue.
  Perm sift(Perm g, std::size_t from) const;

  std::uint32_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

}  // namespace amalgam
