#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace amalgam {

enum class GroupFamily { SL, SU };

/// |SL(n,q)| or |SU(n,q)|, the order a certified chain must reach.
struct GroupOrderTarget {
  GroupFamily family;
  unsigned n;
  std::uint64_t q;
  mpz_class value;

  std::string name() const;
};

/// SL: q^(n(n-1)/2) prod_{i=2..n} (q^i - 1)
/// SU: q^(n(n-1)/2) prod_{i=2..n} (q^i - (-1)^i)
/// Throws std::invalid_argument unless q is an odd prime power and n >= 1.
GroupOrderTarget group_order_formula(GroupFamily family, unsigned n, std::uint64_t q);

}  // namespace amalgam
