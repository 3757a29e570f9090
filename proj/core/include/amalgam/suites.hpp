#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "amalgam/generators.hpp"
#include "amalgam/reduction.hpp"
#include "amalgam/report.hpp"
#include "amalgam/stabilizer_chain.hpp"

namespace amalgam {

/// Exact checks over Z[1/sqrt(-2)]: unitarity and determinants, element
/// orders, the GL(2,3) presentation, the subgroups <a,b>, <a,b,d>, <b,c>
/// and their intersection, and the spectrum of bc.
VerificationReport verify_exact(const Generators& g = builtin_generators());

enum class VerifyLevel { quick, full };

struct ModOptions {
  std::uint32_t p = 3;
  IdealSign ideal = IdealSign::plus;
  VerifyLevel level = VerifyLevel::quick;
  std::uint64_t seed = 0;
  std::size_t closure_cap = 100'000;
  ChainOptions chain{};
  /// Switch from the vector domain to projective points when a vector
  /// chain could not fit in the memory budget (needed at q = 49).
  bool auto_projective = true;
};

class UnsupportedPrime : public std::invalid_argument {
 public:
  explicit UnsupportedPrime(std::uint32_t p)
      : std::invalid_argument("unsupported prime " + std::to_string(p) + ": need an odd prime below 2^20") {}
};

/// Checks of the reduction modulo a prime ideal above p. Quick level:
/// reduction well defined, homomorphism spot checks, determinants, the
/// Hermitian form at inert primes, faithfulness on <b,c> and <a,b,d>. Full
/// level adds the orbit / M11 certificate at p = 3 and the SL/SU order
/// certificate for p > 3. Throws UnsupportedPrime for p = 2 or non-primes.
VerificationReport verify_mod(const Generators& g, const ModOptions& options);

/// Characteristic polynomial summary for a word in the generators.
struct Spectrum {
  CharPoly poly;
  std::optional<unsigned long> order;  // nullopt past the order cap
  bool self_reciprocal = false;
};

Spectrum spectrum(const MatrixR& m);

/// Reduced generators a, b, c, d (f excluded: it is not in the group).
std::vector<FqMatrix> reduced_group_generators(const Generators& g, const ReductionContext& ctx);

/// |SL(5,p)| for split p, |SU(5,p)| for inert p.
GroupOrderTarget theorem_target(const ReductionContext& ctx);

}  // namespace amalgam
