#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "semireg/int_vec.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

/// Hard limits on enumeration. Exceeding either raises CapExceeded.
struct EnumerationCaps {
  std::int64_t max_degree = 256;
  std::size_t max_layer = 100000;
};

// The homogeneous pieces of B: layer n holds every element of coordinate
// sum n*alpha, i.e. every n-fold sum of generators. Immutable once built.
class LayeredMembership {
 public:
  static LayeredMembership build(const SemigroupPresentation& presentation, std::int64_t top_degree,
                                 const EnumerationCaps& caps = {});

  const SemigroupPresentation& presentation() const noexcept { return presentation_; }
  std::int64_t top_degree() const noexcept { return static_cast<std::int64_t>(layers_.size()) - 1; }
  /// Sorted lexicographically.
  const std::vector<IntVec>& layer(std::int64_t n) const;
  bool layer_contains(std::int64_t n, const IntVec& x) const;

 private:
  explicit LayeredMembership(SemigroupPresentation presentation) : presentation_(std::move(presentation)) {}

  SemigroupPresentation presentation_;
  std::vector<std::vector<IntVec>> layers_;
  std::vector<std::unordered_set<IntVec, IntVecHash>> lookup_;
};

/// x in B. Throws std::out_of_range when x's degree exceeds the materialized
/// layers.
bool contains(const SemigroupPresentation& presentation, const LayeredMembership& layers, const IntVec& x);

}  // namespace semireg
