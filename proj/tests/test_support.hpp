#pragma once

#include <random>
#include <string>

#include "amalgam/generators.hpp"
#include "amalgam/ring.hpp"

namespace amalgam::testing {

inline RingElem random_ring_elem(std::mt19937_64& rng, long range = 50, unsigned max_k = 4) {
  std::uniform_int_distribution<long> coeff(-range, range);
  std::uniform_int_distribution<unsigned> exp(0, max_k);
  return RingElem::canonicalize(coeff(rng), coeff(rng), exp(rng));
}

/// Random word over a, b, c, d and their inverses.
inline std::string random_word(std::mt19937_64& rng, int max_len = 8) {
  static const std::string letters = "abcdABCD";
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(letters.size()) - 1);
  std::string w;
  for (int i = len(rng); i > 0; --i) w += letters[pick(rng)];
  return w;
}

}  // namespace amalgam::testing
