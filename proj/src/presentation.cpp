#include "semireg/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semireg/errors.hpp"

namespace semireg {

std::string_view to_string(ValidationRule rule) {
  switch (rule) {
    case ValidationRule::Malformed: return "Malformed";
    case ValidationRule::BadParameters: return "BadParameters";
    case ValidationRule::DimensionMismatch: return "DimensionMismatch";
    case ValidationRule::NegativeCoordinate: return "NegativeCoordinate";
    case ValidationRule::NonHomogeneous: return "NonHomogeneous";
    case ValidationRule::Duplicate: return "Duplicate";
    case ValidationRule::MissingCorner: return "MissingCorner";
    case ValidationRule::EmptyInterior: return "EmptyInterior";
  }
  return "Unknown";
}

std::vector<IntVec> SemigroupPresentation::generators() const {
  std::vector<IntVec> all = corners_;
  all.insert(all.end(), interior_.begin(), interior_.end());
  return all;
}

SemigroupPresentation validate(const std::vector<IntVec>& raw, std::size_t d, std::int64_t alpha) {
  if (d == 0) throw ValidationError(ValidationRule::BadParameters, "dimension must be positive");
  if (alpha <= 0) throw ValidationError(ValidationRule::BadParameters, "alpha must be positive");

  for (const auto& g : raw) {
    if (g.size() != d)
      throw ValidationError(ValidationRule::DimensionMismatch,
                            to_string(g) + " has " + std::to_string(g.size()) + " coordinates, expected " +
                                std::to_string(d));
    if (!g.is_nonnegative()) throw ValidationError(ValidationRule::NegativeCoordinate, to_string(g));
    if (g.sum() != alpha)
      throw ValidationError(ValidationRule::NonHomogeneous,
                            to_string(g) + " has coordinate sum " + std::to_string(g.sum()) + " != " +
                                std::to_string(alpha));
  }

  std::set<IntVec> seen;
  for (const auto& g : raw)
    if (!seen.insert(g).second) throw ValidationError(ValidationRule::Duplicate, to_string(g));

  SemigroupPresentation p;
  p.dimension_ = d;
  p.alpha_ = alpha;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec corner = IntVec::unit(d, i, alpha);
    if (!seen.contains(corner)) throw ValidationError(ValidationRule::MissingCorner, to_string(corner) + " absent");
    p.corners_.push_back(std::move(corner));
  }
  for (const auto& g : raw)
    if (std::find(p.corners_.begin(), p.corners_.end(), g) == p.corners_.end()) p.interior_.push_back(g);
  if (p.interior_.empty()) throw ValidationError(ValidationRule::EmptyInterior, "no generator besides the corners");

  std::int64_t g = 0;
  for (const auto& a : p.interior_)
    for (auto c : a) g = std::gcd(g, c);
  if (g > 1)
    p.warnings_.push_back("interior coordinates share the factor " + std::to_string(g) +
                          "; alpha is not minimal");
  return p;
}

}  // namespace semireg
