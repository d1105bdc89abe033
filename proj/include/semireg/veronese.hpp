#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semireg/bigint.hpp"
#include "semireg/int_vec.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

// Full Veronese semigroup B_{d,alpha}, generated by every u in N^d with
// coordinate sum alpha.
struct VeroneseParams {
  std::int64_t d = 1;
  std::int64_t alpha = 1;
};

/// All compositions of alpha into d parts, in descending lexicographic order
/// (alpha*e_1 first).
std::vector<IntVec> veronese_generators(VeroneseParams p);

/// The standard-form presentation of B_{d,alpha}; needs d >= 2, alpha >= 2.
SemigroupPresentation veronese_presentation(VeroneseParams p);

/// floor(d - d/alpha).
std::int64_t veronese_regularity(VeroneseParams p);

struct DegreeCodim {
  BigInt degree;  // alpha^(d-1)
  BigInt codim;   // C(alpha+d-1, d-1) - d
};

/// Throws std::invalid_argument for d = 1 or alpha = 1.
DegreeCodim veronese_deg_codim(VeroneseParams p);

struct SaturationResult {
  bool holds = false;
  /// The set equality r*M + {e_i} = (r+1)*M was evaluated literally and
  /// agreed with the inequality (r+1)*alpha > d*(alpha-1).
  bool literal_checked = false;
};

/// Evaluates (r+1)*alpha > d*(alpha-1). When (r+1)*M has at most
/// `literal_cap` elements the set equality is also built from Minkowski sums
/// and any disagreement raises InternalError.
SaturationResult saturation_check(VeroneseParams p, std::int64_t r, std::size_t literal_cap = 200000);

}  // namespace semireg
