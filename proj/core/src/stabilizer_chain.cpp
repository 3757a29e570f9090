#include "amalgam/stabilizer_chain.hpp"

#include <algorithm>

namespace amalgam {

ProductReplacement::ProductReplacement(Field field, const std::vector<FqMatrix>& gens, std::uint64_t seed,
                                       std::size_t rank, std::size_t burn_in)
    : field_(std::move(field)), accumulator_(FqMatrix::identity()), rng_(seed) {
  const std::size_t n = std::max({rank, gens.size(), std::size_t{2}});
  slots_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) slots_.push_back(gens.empty() ? FqMatrix::identity() : gens[i % gens.size()]);
  for (std::size_t i = 0; i < burn_in; ++i) step();
}

void ProductReplacement::step() {
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  const std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  while (j == i) j = pick(rng_);
  std::uniform_int_distribution<int> coin(0, 1);
  const FqMatrix other = coin(rng_) ? slots_[j] : inverse(field_, slots_[j]);
  slots_[i] = coin(rng_) ? mul(field_, slots_[i], other) : mul(field_, other, slots_[i]);
  accumulator_ = mul(field_, accumulator_, slots_[i]);
}

FqMatrix ProductReplacement::next() {
  step();
  return accumulator_;
}

StabilizerChain::StabilizerChain(Field field, ActionDomain domain, std::size_t max_memory)
    : space_(std::move(field), domain), max_memory_(max_memory) {
  scalar_kernel_.assign(space_.field().order(), false);
  scalar_kernel_[1] = true;
}

void StabilizerChain::charge(std::size_t bytes) {
  if (memory_used_ + bytes > max_memory_) throw MemoryBudgetExceeded(memory_used_ + bytes);
  memory_used_ += bytes;
}

StabilizerChain::SiftResult StabilizerChain::sift(FqMatrix g, std::size_t from) const {
  const Field& F = space_.field();
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point pt = space_.image(level.base_point, g);
    if (level.label[pt] == -1) return {SiftOutcome::escaped, g, i};
    while (level.label[pt] != -2) {
      const auto s = static_cast<std::size_t>(level.label[pt]);
      g = mul(F, g, gens_inv_[s]);
      pt = space_.image(pt, gens_inv_[s]);
    }
  }
  if (g.is_identity()) return {SiftOutcome::trivial, g, levels_.size()};
  if (space_.domain() == ActionDomain::projective && is_scalar(g)) {
    return {SiftOutcome::scalar, g, levels_.size()};
  }
  return {SiftOutcome::escaped, g, levels_.size()};
}

bool StabilizerChain::absorb(const FqMatrix& g) {
  SiftResult r = sift(g);
  switch (r.outcome) {
    case SiftOutcome::trivial:
      return false;
    case SiftOutcome::scalar: {
      const bool known = scalar_kernel_[r.residue(0, 0)];
      add_scalar(r.residue(0, 0));
      return !known;
    }
    case SiftOutcome::escaped:
      add_strong_generator(r.residue, r.level);
      return true;
  }
  return false;
}

bool StabilizerChain::contains(const FqMatrix& g) const {
  const SiftResult r = sift(g);
  if (r.outcome == SiftOutcome::trivial) return true;
  return r.outcome == SiftOutcome::scalar && scalar_kernel_[r.residue(0, 0)];
}

void StabilizerChain::add_scalar(FieldElem s) {
  const Field& F = space_.field();
  std::vector<FieldElem> members;
  for (FieldElem x = 0; x < scalar_kernel_.size(); ++x)
    if (scalar_kernel_[x]) members.push_back(x);
  for (std::size_t head = 0; head < members.size(); ++head) {
    const FieldElem next = F.mul(members[head], s);
    if (!scalar_kernel_[next]) {
      scalar_kernel_[next] = true;
      members.push_back(next);
    }
  }
}

void StabilizerChain::new_level(const FqMatrix& h) {
  const auto is_base = [&](Point p) {
    return std::any_of(levels_.begin(), levels_.end(), [&](const Level& l) { return l.base_point == p; });
  };
  std::optional<Point> chosen;
  for (std::size_t i = 0; i < kDim && !chosen; ++i) {
    const Point e = space_.basis_point(i);
    if (!is_base(e) && space_.image(e, h) != e) chosen = e;
  }
  for (Point p = space_.first(); !chosen && p < space_.slots(); ++p) {
    if (!is_base(p) && space_.image(p, h) != p) chosen = p;
  }
  if (!chosen) throw std::logic_error("escaped residue moves no point");

  charge(space_.slots() * sizeof(std::int32_t));
  Level level;
  level.base_point = *chosen;
  level.label.assign(space_.slots(), -1);
  level.label[*chosen] = -2;
  level.orbit.push_back(*chosen);
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_strong_generator(const FqMatrix& h, std::size_t level) {
  if (level == levels_.size()) new_level(h);
  charge(2 * sizeof(FqMatrix));
  const auto idx = static_cast<std::uint32_t>(gens_.size());
  gens_.push_back(h);
  gens_inv_.push_back(inverse(space_.field(), h));
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].gens.push_back(idx);
    extend_orbit(levels_[i], idx);
  }
}

void StabilizerChain::extend_orbit(Level& level, std::uint32_t gen) {
  const std::size_t before = level.orbit.size();
  const std::size_t capacity_before = level.orbit.capacity();
  for (std::size_t k = 0; k < before; ++k) {
    const Point img = space_.image(level.orbit[k], gens_[gen]);
    if (level.label[img] == -1) {
      level.label[img] = static_cast<std::int32_t>(gen);
      level.orbit.push_back(img);
    }
  }
  for (std::size_t k = before; k < level.orbit.size(); ++k) {
    const FqVector v = space_.vector(level.orbit[k]);
    for (std::uint32_t s : level.gens) {
      const Point img = space_.index(act(space_.field(), v, gens_[s]));
      if (level.label[img] == -1) {
        level.label[img] = static_cast<std::int32_t>(s);
        level.orbit.push_back(img);
      }
    }
  }
  if (level.orbit.capacity() > capacity_before) {
    charge((level.orbit.capacity() - capacity_before) * sizeof(Point));
  }
}

FqMatrix StabilizerChain::transversal(std::size_t level, Point pt) const {
  const Field& F = space_.field();
  const Level& l = levels_[level];
  FqMatrix acc = FqMatrix::identity();
  while (l.label[pt] != -2) {
    const auto s = static_cast<std::size_t>(l.label[pt]);
    acc = mul(F, gens_[s], acc);
    pt = space_.image(pt, gens_inv_[s]);
  }
  return acc;
}

FqMatrix StabilizerChain::transversal_inverse(std::size_t level, Point pt) const {
  const Field& F = space_.field();
  const Level& l = levels_[level];
  FqMatrix acc = FqMatrix::identity();
  while (l.label[pt] != -2) {
    const auto s = static_cast<std::size_t>(l.label[pt]);
    acc = mul(F, acc, gens_inv_[s]);
    pt = space_.image(pt, gens_inv_[s]);
  }
  return acc;
}

void StabilizerChain::complete() {
  const Field& F = space_.field();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
      for (std::size_t k = 0; k < levels_[i].orbit.size() && !changed; ++k) {
        const Point pt = levels_[i].orbit[k];
        const FqMatrix u = transversal(i, pt);
        const std::vector<std::uint32_t> gens = levels_[i].gens;
        for (std::uint32_t s : gens) {
          const Point img = space_.image(pt, gens_[s]);
          const FqMatrix schreier = mul(F, mul(F, u, gens_[s]), transversal_inverse(i, img));
          const SiftResult r = sift(schreier, i + 1);
          if (r.outcome == SiftOutcome::trivial) continue;
          if (r.outcome == SiftOutcome::scalar) {
            add_scalar(r.residue(0, 0));
            continue;
          }
          add_strong_generator(r.residue, r.level);
          changed = true;
          break;
        }
      }
    }
  }
}

std::vector<FqVector> StabilizerChain::base() const {
  std::vector<FqVector> out;
  for (const Level& l : levels_) out.push_back(space_.vector(l.base_point));
  return out;
}

std::vector<std::uint64_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::uint64_t> out;
  for (const Level& l : levels_) out.push_back(l.orbit.size());
  return out;
}

std::uint64_t StabilizerChain::total_orbit_points() const {
  std::uint64_t n = 0;
  for (const Level& l : levels_) n += l.orbit.size();
  return n;
}

std::uint64_t StabilizerChain::scalar_kernel_size() const {
  return static_cast<std::uint64_t>(std::count(scalar_kernel_.begin(), scalar_kernel_.end(), true));
}

mpz_class StabilizerChain::order() const {
  mpz_class n = static_cast<unsigned long>(scalar_kernel_size());
  for (const Level& l : levels_) n *= static_cast<unsigned long>(l.orbit.size());
  return n;
}

std::string to_string(OrderStatus s) {
  switch (s) {
    case OrderStatus::exact: return "exact";
    case OrderStatus::certified: return "certified";
    case OrderStatus::probable: return "probable";
  }
  return "?";
}

namespace {

void require_in_target(const Field& F, const std::vector<FqMatrix>& gens, const GroupOrderTarget& target) {
  if (target.n != kDim) throw std::invalid_argument("target dimension must be 5");
  if (target.q != F.characteristic()) {
    throw std::invalid_argument("target " + target.name() + " does not match the working field");
  }
  const bool unitary = target.family == GroupFamily::SU;
  if (unitary != F.is_extension()) {
    throw std::invalid_argument("target " + target.name() + " needs " +
                                (unitary ? "GF(p^2)" : "GF(p)") + " as working field");
  }
  for (const FqMatrix& g : gens) {
    if (det(F, g) != F.one()) throw std::invalid_argument("generator does not have determinant 1");
    if (unitary && !preserves_standard_form(F, g)) {
      throw std::invalid_argument("generator does not preserve the Hermitian form");
    }
  }
}

}  // namespace

OrderResult matrix_group_order(const Field& F, const std::vector<FqMatrix>& gens, const ChainOptions& options,
                               const std::optional<GroupOrderTarget>& target) {
  if (target) require_in_target(F, gens, *target);

  StabilizerChain chain(F, options.domain, options.max_memory);
  OrderResult result;
  try {
    for (const FqMatrix& g : gens) chain.absorb(g);
    ProductReplacement random(F, gens, options.seed);
    std::size_t stall = 0;
    bool reached = false;
    while (true) {
      if (target && chain.order() == target->value) {
        reached = true;
        break;
      }
      if (stall >= options.stall_limit) break;
      ++result.random_elements;
      stall = chain.absorb(random.next()) ? 0 : stall + 1;
    }
    if (reached) {
      result.status = OrderStatus::certified;
    } else if (chain.total_orbit_points() <= options.deterministic_orbit_limit) {
      chain.complete();
      result.status = OrderStatus::exact;
    } else if (target) {
      throw Inconclusive(chain.order(), "randomized chain stalled below " + target->name() +
                                            " and the orbits are too large for deterministic completion");
    } else {
      result.status = OrderStatus::probable;
    }
  } catch (const MemoryBudgetExceeded& e) {
    throw Inconclusive(chain.order(), e.what());
  }

  result.order = chain.order();
  result.orbit_sizes = chain.orbit_sizes();
  result.base = chain.base();
  result.scalar_kernel = chain.scalar_kernel_size();
  result.strong_generators = chain.strong_generator_count();
  return result;
}

}  // namespace amalgam
