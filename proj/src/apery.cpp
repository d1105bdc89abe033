#include "semireg/apery.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "semireg/errors.hpp"
#include "semireg/lattice.hpp"

namespace semireg {

AperyDecomposition::AperyDecomposition(std::size_t dimension, std::int64_t alpha, std::vector<ResidueClass> classes)
    : dimension_(dimension), alpha_(alpha), classes_(std::move(classes)) {
  for (std::size_t t = 0; t < classes_.size(); ++t) by_residue_.emplace(classes_[t].representative, t);
}

std::vector<IntVec> AperyDecomposition::elements() const {
  std::vector<IntVec> all;
  for (const auto& c : classes_) all.insert(all.end(), c.members.begin(), c.members.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::int64_t AperyDecomposition::max_degree() const {
  std::int64_t best = 0;
  for (const auto& c : classes_)
    for (const auto& x : c.members) best = std::max(best, integral_degree(x, alpha_));
  return best;
}

std::ptrdiff_t AperyDecomposition::class_index(const IntVec& x) const {
  auto it = by_residue_.find(class_representative(x, alpha_));
  return it == by_residue_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool AperyDecomposition::contains(const IntVec& x) const {
  if (x.size() != dimension_ || !x.is_nonnegative()) return false;
  const auto t = class_index(x);
  if (t < 0) return false;
  const auto& members = classes_[static_cast<std::size_t>(t)].members;
  return std::any_of(members.begin(), members.end(), [&](const IntVec& y) { return componentwise_le(y, x); });
}

AperyDecomposition apery_set(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  const std::size_t d = presentation.dimension();
  const std::int64_t alpha = presentation.alpha();
  const BigInt f = class_count(presentation);
  const BigInt bound = f - static_cast<long>(presentation.codim());

  std::unordered_map<IntVec, std::vector<IntVec>, IntVecHash> found;
  std::vector<IntVec> slice{IntVec::zero(d)};
  found[IntVec::zero(d)].push_back(IntVec::zero(d));

  for (std::int64_t n = 1;; ++n) {
    std::unordered_set<IntVec, IntVecHash> candidates;
    for (const auto& x : slice)
      for (const auto& a : presentation.interior()) {
        candidates.insert(x + a);
        if (candidates.size() > caps.max_layer)
          throw CapExceeded("Apery enumeration: degree " + std::to_string(n) + " exceeds " +
                            std::to_string(caps.max_layer) + " candidates");
      }

    std::vector<IntVec> next;
    for (const auto& x : candidates) {
      auto it = found.find(class_representative(x, alpha));
      const bool reducible = it != found.end() && std::any_of(it->second.begin(), it->second.end(), [&](const IntVec& y) {
                               return componentwise_le(y, x);
                             });
      if (!reducible) next.push_back(x);
    }
    if (next.empty()) break;
    if (BigInt(static_cast<long>(n)) > bound)
      throw InternalError("Apery element of degree " + std::to_string(n) + " exceeds f - c");
    if (n > caps.max_degree)
      throw CapExceeded("Apery enumeration exceeds max degree " + std::to_string(caps.max_degree));

    std::sort(next.begin(), next.end());
    for (const auto& x : next) found[class_representative(x, alpha)].push_back(x);
    slice = std::move(next);
  }

  if (BigInt(static_cast<long>(found.size())) != f)
    throw InternalError("found " + std::to_string(found.size()) + " Apery classes, expected " + f.get_str());

  std::vector<ResidueClass> classes;
  classes.reserve(found.size());
  for (auto& [rep, members] : found) {
    ResidueClass c;
    c.representative = rep;
    std::sort(members.begin(), members.end());
    c.members = std::move(members);
    c.shift = c.members.front();
    for (const auto& x : c.members) c.shift = componentwise_min(c.shift, x);
    c.shift_degree = integral_degree(c.shift, alpha);
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ResidueClass& a, const ResidueClass& b) {
    const auto da = a.representative.sum();
    const auto db = b.representative.sum();
    return da != db ? da < db : a.representative < b.representative;
  });
  return AperyDecomposition(d, alpha, std::move(classes));
}

std::int64_t reduction_number(const AperyDecomposition& apery) { return apery.max_degree(); }

std::int64_t reduction_number(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  return reduction_number(apery_set(presentation, caps));
}

}  // namespace semireg
