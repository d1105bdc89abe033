#include "semireg/corpus.hpp"

#include <algorithm>
#include <vector>

namespace semireg {

namespace {

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

void interior_points(std::size_t d, std::int64_t alpha, std::size_t pos, std::int64_t left, IntVec& cur,
                     std::vector<IntVec>& out) {
  if (pos + 1 == d) {
    cur[pos] = left;
    if (std::all_of(cur.begin(), cur.end(), [alpha](auto v) { return v < alpha; })) out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= left; ++v) {
    cur[pos] = v;
    interior_points(d, alpha, pos + 1, left - v, cur, out);
  }
}

}  // namespace

SemigroupPresentation random_presentation(std::mt19937_64& rng, const CorpusOptions& options) {
  const auto d = uniform<std::size_t>(rng, options.min_dimension, options.max_dimension);
  const auto alpha = uniform<std::int64_t>(rng, options.min_alpha, options.max_alpha);

  std::vector<IntVec> pool;
  IntVec cur = IntVec::zero(d);
  interior_points(d, alpha, 0, alpha, cur, pool);
  std::shuffle(pool.begin(), pool.end(), rng);
  const auto c = uniform<std::size_t>(rng, 1, std::min(options.max_interior, pool.size()));

  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(IntVec::unit(d, i, alpha));
  gens.insert(gens.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(c));
  return validate(gens, d, alpha);
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t max_gens, std::size_t max_vars,
                                    std::int64_t max_exponent) {
  for (;;) {
    const auto vars = uniform<std::size_t>(rng, 1, max_vars);
    const auto count = uniform<std::size_t>(rng, 1, max_gens);
    std::vector<Monomial> gens;
    for (std::size_t k = 0; k < count; ++k) {
      Monomial m = Monomial::zero(vars);
      for (std::size_t i = 0; i < vars; ++i) m[i] = uniform<std::int64_t>(rng, 0, max_exponent);
      gens.push_back(std::move(m));
    }
    MonomialIdeal ideal = minimalize(vars, std::move(gens));
    if (!ideal.is_unit()) return ideal;
  }
}

}  // namespace semireg
