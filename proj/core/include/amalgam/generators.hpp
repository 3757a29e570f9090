#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "amalgam/matrix.hpp"

namespace amalgam {

/// The four generators of the lifted representation together with the
/// 5-cycle permutation matrix f, which lies outside the generated group.
struct Generators {
  MatrixR a, b, c, d, f;

  friend bool operator==(const Generators&, const Generators&) = default;
};

Generators builtin_generators();

/// Fixture text: for each of a, b, c, d, f in order, a "# name" line
/// followed by the five-line matrix block; blocks separated by a blank line.
std::string to_fixture(const Generators& g);
Generators parse_fixture(std::string_view text);

/// Product of generators spelled by `word`, left to right: letters a, b, c,
/// d, f; an upper-case letter is the inverse (adjoint). "" is the identity.
/// Throws std::invalid_argument on other characters.
MatrixR evaluate_word(const Generators& g, std::string_view word);

Generators load_fixture_file(const std::string& path);
void save_fixture_file(const Generators& g, const std::string& path);

}  // namespace amalgam
