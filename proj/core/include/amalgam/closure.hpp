#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amalgam/finite_field.hpp"
#include "amalgam/fq_matrix.hpp"
#include "amalgam/matrix.hpp"

namespace amalgam {

/// Multiplication, identity and canonical key for exact matrices.
struct ExactAlgebra {
  using Elem = MatrixR;
  Elem identity() const { return MatrixR::identity(); }
  Elem mul(const Elem& m, const Elem& n) const { return m * n; }
  std::string key(const Elem& m) const { return m.encode(); }
};

/// Same for matrices over a finite field; the key is the packed entry codes.
struct FqAlgebra {
  using Elem = FqMatrix;
  Field field;
  Elem identity() const { return FqMatrix::identity(); }
  Elem mul(const Elem& m, const Elem& n) const { return amalgam::mul(field, m, n); }
  std::string key(const Elem& m) const {
    return std::string(reinterpret_cast<const char*>(m.e.data()), sizeof(m.e));
  }
};

inline constexpr std::size_t kExactClosureCap = 10'000;
inline constexpr std::size_t kFiniteClosureCap = 100'000;

class ClosureExceedsCap : public std::runtime_error {
 public:
  explicit ClosureExceedsCap(std::size_t cap)
      : std::runtime_error("group closure exceeds cap " + std::to_string(cap)) {}
};

/// Every element of a finite matrix group, indexed by canonical key.
template <class Algebra>
class ClosureGroup {
 public:
  using Elem = typename Algebra::Elem;

  /// Breadth-first closure of gens under right multiplication. In a finite
  /// group this also yields all inverses. Throws ClosureExceedsCap.
  static ClosureGroup generate(Algebra alg, const std::vector<Elem>& gens, std::size_t cap,
                               std::vector<std::string> names = {}) {
    ClosureGroup g(std::move(alg), cap, std::move(names));
    g.insert(g.alg_.identity());
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
      for (const Elem& s : gens) {
        Elem next = g.alg_.mul(g.elements_[head], s);
        if (!g.contains(next)) {
          if (g.elements_.size() >= cap) throw ClosureExceedsCap(cap);
          g.insert(std::move(next));
        }
      }
    }
    return g;
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Elem>& elements() const { return elements_; }
  const Elem& operator[](std::size_t i) const { return elements_[i]; }
  const Algebra& algebra() const { return alg_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t cap() const { return cap_; }

  bool contains(const Elem& m) const { return index_.count(alg_.key(m)) > 0; }

  /// Position of m in elements(), or size() if absent.
  std::size_t index_of(const Elem& m) const {
    auto it = index_.find(alg_.key(m));
    return it == index_.end() ? elements_.size() : it->second;
  }

  /// Elements common to both closures, scanning the smaller one.
  friend ClosureGroup intersection(const ClosureGroup& g1, const ClosureGroup& g2) {
    const ClosureGroup& small = g1.size() <= g2.size() ? g1 : g2;
    const ClosureGroup& large = g1.size() <= g2.size() ? g2 : g1;
    ClosureGroup out(small.alg_, small.cap_, {});
    for (const Elem& m : small.elements_)
      if (large.contains(m)) out.insert(m);
    return out;
  }

 private:
  ClosureGroup(Algebra alg, std::size_t cap, std::vector<std::string> names)
      : alg_(std::move(alg)), cap_(cap), names_(std::move(names)) {}

  void insert(Elem m) {
    index_.emplace(alg_.key(m), elements_.size());
    elements_.push_back(std::move(m));
  }

  Algebra alg_;
  std::size_t cap_;
  std::vector<std::string> names_;
  std::vector<Elem> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ExactClosure = ClosureGroup<ExactAlgebra>;
using FqClosure = ClosureGroup<FqAlgebra>;

inline ExactClosure bfs_closure(const std::vector<MatrixR>& gens, std::size_t cap = kExactClosureCap,
                                std::vector<std::string> names = {}) {
  return ExactClosure::generate(ExactAlgebra{}, gens, cap, std::move(names));
}

inline FqClosure bfs_closure(const Field& F, const std::vector<FqMatrix>& gens,
                             std::size_t cap = kFiniteClosureCap, std::vector<std::string> names = {}) {
  return FqClosure::generate(FqAlgebra{F}, gens, cap, std::move(names));
}

template <class Algebra>
bool is_subgroup_member(const typename Algebra::Elem& m, const ClosureGroup<Algebra>& g) {
  return g.contains(m);
}

/// Largest r such that g has an elementary abelian subgroup of order 2^r.
template <class Algebra>
int elementary_abelian_2_rank(const ClosureGroup<Algebra>& g);

extern template int elementary_abelian_2_rank(const ExactClosure&);
extern template int elementary_abelian_2_rank(const FqClosure&);

}  // namespace amalgam
