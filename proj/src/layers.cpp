#include "semireg/layers.hpp"

#include <algorithm>
#include <stdexcept>

#include "semireg/errors.hpp"

namespace semireg {

LayeredMembership LayeredMembership::build(const SemigroupPresentation& presentation, std::int64_t top_degree,
                                           const EnumerationCaps& caps) {
  if (top_degree < 0) throw std::invalid_argument("negative layer degree");
  if (top_degree > caps.max_degree)
    throw CapExceeded("layers up to degree " + std::to_string(top_degree) + " exceed max degree " +
                      std::to_string(caps.max_degree));

  LayeredMembership out(presentation);
  const auto gens = presentation.generators();
  out.layers_.push_back({IntVec::zero(presentation.dimension())});
  out.lookup_.emplace_back(out.layers_.back().begin(), out.layers_.back().end());

  for (std::int64_t n = 1; n <= top_degree; ++n) {
    std::unordered_set<IntVec, IntVecHash> next;
    for (const auto& x : out.layers_.back()) {
      for (const auto& g : gens) {
        next.insert(x + g);
        if (next.size() > caps.max_layer)
          throw CapExceeded("layer " + std::to_string(n) + " exceeds " + std::to_string(caps.max_layer) +
                            " elements");
      }
    }
    std::vector<IntVec> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end());
    out.layers_.push_back(std::move(sorted));
    out.lookup_.push_back(std::move(next));
  }
  return out;
}

const std::vector<IntVec>& LayeredMembership::layer(std::int64_t n) const {
  if (n < 0 || n > top_degree()) throw std::out_of_range("layer " + std::to_string(n) + " not materialized");
  return layers_[static_cast<std::size_t>(n)];
}

bool LayeredMembership::layer_contains(std::int64_t n, const IntVec& x) const {
  if (n < 0 || n > top_degree()) throw std::out_of_range("layer " + std::to_string(n) + " not materialized");
  return lookup_[static_cast<std::size_t>(n)].contains(x);
}

bool contains(const SemigroupPresentation& presentation, const LayeredMembership& layers, const IntVec& x) {
  if (x.size() != presentation.dimension() || !x.is_nonnegative()) return false;
  const auto s = x.sum();
  if (s % presentation.alpha() != 0) return false;
  return layers.layer_contains(s / presentation.alpha(), x);
}

}  // namespace semireg
