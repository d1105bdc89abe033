#pragma once

#include <cstddef>
#include <vector>

#include "semireg/int_vec.hpp"
#include "semireg/layers.hpp"

namespace semireg {

// A sequence of generators b_1..b_n with x - b_1 - ... - b_i in B for all i.
struct StarSequence {
  IntVec base;
  std::vector<IntVec> steps;

  /// x(lambda, i) = base - (b_1 + ... + b_i).
  IntVec remainder(std::size_t i) const;
};

/// Up to `limit` full-length sequences for x, i.e. of length deg x ending at
/// zero, in depth-first order over the presentation's generator order.
/// Empty for x = 0. Throws std::invalid_argument when x is not in B; the
/// layers must reach deg x.
std::vector<StarSequence> star_sequences(const LayeredMembership& layers, const IntVec& x, std::size_t limit);

}  // namespace semireg
