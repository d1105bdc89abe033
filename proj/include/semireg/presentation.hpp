#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semireg/int_vec.hpp"

namespace semireg {

// Standard-form generating set of a homogeneous simplicial semigroup
// B in N^d: the corners alpha*e_1..alpha*e_d plus c >= 1 interior
// generators, all of coordinate sum alpha. Only validate() builds one.
class SemigroupPresentation {
 public:
  std::size_t dimension() const noexcept { return dimension_; }
  std::int64_t alpha() const noexcept { return alpha_; }
  const std::vector<IntVec>& corners() const noexcept { return corners_; }
  const std::vector<IntVec>& interior() const noexcept { return interior_; }
  std::size_t codim() const noexcept { return interior_.size(); }
  /// Corners first, then the interior generators in input order.
  std::vector<IntVec> generators() const;
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend SemigroupPresentation validate(const std::vector<IntVec>& raw, std::size_t d, std::int64_t alpha);

 private:
  SemigroupPresentation() = default;

  std::size_t dimension_ = 0;
  std::int64_t alpha_ = 0;
  std::vector<IntVec> corners_;
  std::vector<IntVec> interior_;
  std::vector<std::string> warnings_;
};

/// Checks the standard-form rules and throws ValidationError naming the first
/// rule that fails. A coordinate gcd > 1 among the interior generators is
/// reported as a warning only.
SemigroupPresentation validate(const std::vector<IntVec>& raw, std::size_t d, std::int64_t alpha);

}  // namespace semireg
