#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "semireg/int_vec.hpp"
#include "semireg/layers.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

// One residue class Gamma_t of the Apery set B_A.
struct ResidueClass {
  IntVec representative;        // residue in [0, alpha)^d
  std::vector<IntVec> members;  // Gamma_t, sorted
  IntVec shift;                 // h_t, componentwise minimum of the members
  std::int64_t shift_degree = 0;
};

// B_A = { x in B : x - a not in B for every a in A \ {0} }, grouped by
// residue class. Classes are ordered by (degree of representative,
// representative).
class AperyDecomposition {
 public:
  AperyDecomposition(std::size_t dimension, std::int64_t alpha, std::vector<ResidueClass> classes);

  std::size_t dimension() const noexcept { return dimension_; }
  std::int64_t alpha() const noexcept { return alpha_; }
  const std::vector<ResidueClass>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }

  /// Union of the classes, sorted.
  std::vector<IntVec> elements() const;
  std::int64_t max_degree() const;
  /// Index of the class containing x's residue, or -1 when x is not in G(B).
  std::ptrdiff_t class_index(const IntVec& x) const;
  /// x in B, decided as x in y + alpha*N^d for some y of x's class.
  bool contains(const IntVec& x) const;

 private:
  std::size_t dimension_;
  std::int64_t alpha_;
  std::vector<ResidueClass> classes_;
  std::map<IntVec, std::size_t> by_residue_;
};

/// Enumerates B_A degree by degree. A degree-n element of B_A is a degree
/// n-1 element of B_A plus an interior generator, and a candidate x is in
/// B_A iff no element of B_A found earlier lies in x - alpha*N^d. The
/// enumeration stops at the first empty degree; reaching degree f - c + 1 or
/// finding fewer than f classes raises InternalError.
AperyDecomposition apery_set(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

std::int64_t reduction_number(const AperyDecomposition& apery);
std::int64_t reduction_number(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

}  // namespace semireg
