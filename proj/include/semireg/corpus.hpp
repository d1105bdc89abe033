#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "semireg/monomial_ideal.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

struct CorpusOptions {
  std::size_t min_dimension = 2;
  std::size_t max_dimension = 3;
  std::int64_t min_alpha = 2;
  std::int64_t max_alpha = 4;
  std::size_t max_interior = 4;
};

/// Uniformly chosen d and alpha, then 1..max_interior distinct non-corner
/// points of coordinate sum alpha.
SemigroupPresentation random_presentation(std::mt19937_64& rng, const CorpusOptions& options = {});

/// 1..max_gens random monomials in 1..max_vars variables with exponents in
/// [0, max_exponent], minimalized; resampled until proper.
MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t max_gens = 4, std::size_t max_vars = 5,
                                    std::int64_t max_exponent = 3);

}  // namespace semireg
