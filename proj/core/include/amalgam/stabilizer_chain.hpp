#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/finite_field.hpp"
#include "amalgam/fq_matrix.hpp"
#include "amalgam/order_formula.hpp"
#include "amalgam/point_space.hpp"

namespace amalgam {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

/// Random group elements by product replacement: a pool of `rank` slots
/// seeded with the generators plus an accumulator, stirred `burn_in` times
/// before the first element is returned. Deterministic for a given seed.
class ProductReplacement {
 public:
  ProductReplacement(Field field, const std::vector<FqMatrix>& gens, std::uint64_t seed,
                     std::size_t rank = 10, std::size_t burn_in = 50);

  FqMatrix next();

 private:
  void step();

  Field field_;
  std::vector<FqMatrix> slots_;
  FqMatrix accumulator_;
  std::mt19937_64 rng_;
};

class MemoryBudgetExceeded : public std::runtime_error {
 public:
  explicit MemoryBudgetExceeded(std::size_t needed)
      : std::runtime_error("stabilizer chain needs more than the memory budget (" +
                           std::to_string(needed) + " bytes requested)") {}
};

/// Base and strong generating set for a matrix group acting on the nonzero
/// vectors (faithful) or projective points of GF(q)^5.
///
/// Each level stores a Schreier vector over the whole point space: for a
/// point in the basic orbit, the index of the strong generator that first
/// reached it. Coset representatives are recovered by walking back to the
/// base point. On the projective domain, residues that fix every base point
/// and are scalar are collected into a separate scalar kernel.
class StabilizerChain {
 public:
  StabilizerChain(Field field, ActionDomain domain, std::size_t max_memory = kDefaultMemoryBudget);

  enum class SiftOutcome { trivial, scalar, escaped };

  struct SiftResult {
    SiftOutcome outcome;
    FqMatrix residue;
    /// Level where the residue's base image left the basic orbit; equals
    /// depth() when it fixes every base point but is not absorbed.
    std::size_t level;
  };

  SiftResult sift(FqMatrix g, std::size_t from = 0) const;

  /// Sifts g and, if it escapes, adds the residue as a strong generator.
  /// Returns true if the chain changed. Throws MemoryBudgetExceeded.
  bool absorb(const FqMatrix& g);

  /// Exhaustive Schreier generator test; on return the chain is a complete
  /// BSGS for the group generated by everything absorbed so far.
  void complete();

  bool contains(const FqMatrix& g) const;

  std::size_t depth() const { return levels_.size(); }
  const PointSpace& space() const { return space_; }
  std::vector<FqVector> base() const;
  std::vector<std::uint64_t> orbit_sizes() const;
  std::uint64_t scalar_kernel_size() const;
  std::size_t strong_generator_count() const { return gens_.size(); }
  std::uint64_t total_orbit_points() const;
  std::size_t memory_used() const { return memory_used_; }

  /// Product of basic orbit lengths times the scalar kernel size. Always a
  /// lower bound for (and a divisor of) the order of the group absorbed so
  /// far; exact once complete() has run.
  mpz_class order() const;

  /// Coset representative u with base(level)^u = pt, and its inverse.
  FqMatrix transversal(std::size_t level, Point pt) const;
  FqMatrix transversal_inverse(std::size_t level, Point pt) const;

 private:
  struct Level {
    Point base_point;
    std::vector<std::uint32_t> gens;  // indices into gens_
    std::vector<std::int32_t> label;  // -1 outside the orbit, -2 at the base point
    std::vector<Point> orbit;
  };

  void add_strong_generator(const FqMatrix& h, std::size_t level);
  void new_level(const FqMatrix& h);
  void extend_orbit(Level& level, std::uint32_t gen);
  void add_scalar(FieldElem s);
  void charge(std::size_t bytes);

  PointSpace space_;
  std::size_t max_memory_;
  std::size_t memory_used_ = 0;
  std::vector<FqMatrix> gens_;
  std::vector<FqMatrix> gens_inv_;
  std::vector<Level> levels_;
  std::vector<bool> scalar_kernel_;
};

struct ChainOptions {
  ActionDomain domain = ActionDomain::vectors;
  std::uint64_t seed = 0;
  std::size_t max_memory = kDefaultMemoryBudget;
  /// Consecutive trivially-sifting random elements before the randomized
  /// phase gives up.
  std::size_t stall_limit = 64;
  /// Deterministic completion runs only when the basic orbits hold at most
  /// this many points in total.
  std::uint64_t deterministic_orbit_limit = 20'000;
};

enum class OrderStatus {
  exact,      // deterministic Schreier-Sims completed
  certified,  // randomized chain reached the target order
  probable,   // randomized chain stalled with no target; order is a lower bound
};

std::string to_string(OrderStatus s);

struct OrderResult {
  mpz_class order;
  OrderStatus status;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<FqVector> base;
  std::uint64_t scalar_kernel = 1;
  std::size_t random_elements = 0;
  std::size_t strong_generators = 0;
};

class Inconclusive : public std::runtime_error {
 public:
  Inconclusive(mpz_class current, const std::string& why)
      : std::runtime_error("order computation inconclusive at " + current.get_str() + ": " + why),
        current_(std::move(current)) {}
  const mpz_class& current_order() const { return current_; }

 private:
  mpz_class current_;
};

/// Order of <gens>. With a target, the generators must lie in the target
/// group (det 1, and form-preserving for SU); reaching the target order then
/// certifies equality, because the chain order divides |<gens>| which divides
/// the target. Throws Inconclusive when the target is not reached and the
/// deterministic fallback is out of reach, or the memory budget runs out.
OrderResult matrix_group_order(const Field& F, const std::vector<FqMatrix>& gens, const ChainOptions& options = {},
                               const std::optional<GroupOrderTarget>& target = std::nullopt);

}  // namespace amalgam
