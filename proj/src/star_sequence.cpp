#include "semireg/star_sequence.hpp"

#include <stdexcept>

namespace semireg {

IntVec StarSequence::remainder(std::size_t i) const {
  IntVec r = base;
  for (std::size_t j = 0; j < i; ++j) r -= steps.at(j);
  return r;
}

namespace {

struct Search {
  const LayeredMembership& layers;
  const std::vector<IntVec> gens;
  std::size_t limit;
  IntVec base;
  std::vector<IntVec> path;
  std::vector<StarSequence> out;

  void run(const IntVec& rest) {
    if (out.size() >= limit) return;
    if (rest.is_zero()) {
      out.push_back({base, path});
      return;
    }
    for (const auto& g : gens) {
      if (!componentwise_le(g, rest)) continue;
      IntVec next = rest - g;
      if (!contains(layers.presentation(), layers, next)) continue;
      path.push_back(g);
      run(next);
      path.pop_back();
      if (out.size() >= limit) return;
    }
  }
};

}  // namespace

std::vector<StarSequence> star_sequences(const LayeredMembership& layers, const IntVec& x, std::size_t limit) {
  if (!contains(layers.presentation(), layers, x)) throw std::invalid_argument(to_string(x) + " is not in B");
  if (x.is_zero() || limit == 0) return {};
  Search search{layers, layers.presentation().generators(), limit, x, {}, {}};
  search.run(x);
  return std::move(search.out);
}

}  // namespace semireg
