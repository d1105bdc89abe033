#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "semireg/corpus.hpp"
#include "semireg/presentation.hpp"

namespace fixtures {

using semireg::IntVec;
using semireg::SemigroupPresentation;

// <(4,0),(0,4),(3,1),(1,3)>
inline SemigroupPresentation plane_quartic() {
  return semireg::validate({{4, 0}, {0, 4}, {3, 1}, {1, 3}}, 2, 4);
}

// monomial curve <(40,0),(0,40),(35,5),(11,29)>
inline SemigroupPresentation curve_40() {
  return semireg::validate({{40, 0}, {0, 40}, {35, 5}, {11, 29}}, 2, 40);
}

// non-seminormal, yet the class {(2,2,2)} attains the regularity
inline SemigroupPresentation cubic_3d() {
  return semireg::validate({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}, {1, 1, 1}}, 3, 3);
}

// seminormal, not Cohen-Macaulay
inline SemigroupPresentation seminormal_4d() {
  return semireg::validate({{2, 0, 0, 0},
                            {0, 2, 0, 0},
                            {0, 0, 2, 0},
                            {0, 0, 0, 2},
                            {1, 1, 0, 0},
                            {1, 0, 1, 0},
                            {0, 0, 1, 1},
                            {0, 1, 0, 1}},
                           4, 2);
}

inline std::vector<std::pair<std::string, SemigroupPresentation>> named_examples() {
  return {{"plane_quartic", plane_quartic()},
          {"curve_40", curve_40()},
          {"cubic_3d", cubic_3d()},
          {"seminormal_4d", seminormal_4d()}};
}

/// Random valid presentations with d <= 3, alpha <= 4, c <= 4.
inline std::vector<SemigroupPresentation> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<SemigroupPresentation> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(semireg::random_presentation(rng));
  return out;
}

}  // namespace fixtures
