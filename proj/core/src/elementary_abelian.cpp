#include <algorithm>
#include <vector>

#include "amalgam/closure.hpp"

namespace amalgam {

namespace {

template <class Algebra>
struct Search {
  // involution ids are positions in the closure's element list
  const std::vector<std::size_t>& involutions;
  const std::vector<std::vector<bool>>& commutes;  // over involution positions
  const ClosureGroup<Algebra>& group;
  int best = 0;

  // span holds closure indices of the current subgroup; basis holds positions
  // into `involutions`. Candidates are taken in increasing order, so each
  // subgroup is reached through its sorted independent generating sets only.
  void extend(std::vector<std::size_t>& span, std::vector<std::size_t>& basis, std::size_t from, int rank) {
    best = std::max(best, rank);
    for (std::size_t c = from; c < involutions.size(); ++c) {
      const std::size_t elem = involutions[c];
      if (std::find(span.begin(), span.end(), elem) != span.end()) continue;
      bool ok = true;
      for (std::size_t b : basis) {
        if (!commutes[b][c]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<std::size_t> next = span;
      const auto& t = group[elem];
      for (std::size_t s : span) next.push_back(group.index_of(group.algebra().mul(group[s], t)));
      basis.push_back(c);
      extend(next, basis, c + 1, rank + 1);
      basis.pop_back();
    }
  }
};

}  // namespace

template <class Algebra>
int elementary_abelian_2_rank(const ClosureGroup<Algebra>& g) {
  const auto& alg = g.algebra();
  const auto id = alg.identity();
  const std::size_t id_index = g.index_of(id);

  std::vector<std::size_t> involutions;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == id_index) continue;
    if (alg.mul(g[i], g[i]) == id) involutions.push_back(i);
  }
  const std::size_t n = involutions.size();

  std::vector<std::vector<bool>> commutes(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& x = g[involutions[i]];
      const auto& y = g[involutions[j]];
      commutes[i][j] = commutes[j][i] = alg.mul(x, y) == alg.mul(y, x);
    }
  }
  Search<Algebra> search{involutions, commutes, g};
  std::vector<std::size_t> span{id_index};
  std::vector<std::size_t> basis;
  search.extend(span, basis, 0, 0);
  return search.best;
}

template int elementary_abelian_2_rank(const ExactClosure&);
template int elementary_abelian_2_rank(const FqClosure&);

}  // namespace amalgam
