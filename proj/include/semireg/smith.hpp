#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semireg/bigint.hpp"

namespace semireg {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> invariant_factors;

  bool has_torsion() const;
};

/// Smith normal form over Z. The matrix is taken by value and destroyed.
SmithForm smith_normal_form(IntMatrix m);

/// Rank over F_p of the matrix reduced mod p. p must be prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

}  // namespace semireg
