#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semireg/apery.hpp"
#include "semireg/betti.hpp"
#include "semireg/layers.hpp"
#include "semireg/monomial_ideal.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

struct DecomposedClass {
  ResidueClass residue;
  MonomialIdeal ideal;  // generated by y^((x - h_t)/alpha), x in Gamma_t
};

// K[B] as the direct sum of the shifted monomial ideals I_t(-deg h_t).
class Decomposition {
 public:
  Decomposition(SemigroupPresentation presentation, AperyDecomposition apery);

  const SemigroupPresentation& presentation() const noexcept { return presentation_; }
  const AperyDecomposition& apery() const noexcept { return apery_; }
  const std::vector<DecomposedClass>& classes() const noexcept { return classes_; }
  std::size_t f() const noexcept { return classes_.size(); }

 private:
  SemigroupPresentation presentation_;
  AperyDecomposition apery_;
  std::vector<DecomposedClass> classes_;
};

/// Throws InternalError when any structural invariant of the decomposition
/// fails (minimal generators, height >= 2, unit iff singleton, ...).
Decomposition decompose(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

bool is_seminormal(const AperyDecomposition& apery);
/// B_A inside [0, alpha)^d.
bool is_normal(const AperyDecomposition& apery);
bool is_cohen_macaulay(const AperyDecomposition& apery);

bool is_seminormal(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});
bool is_normal(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});
bool is_cohen_macaulay(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

struct BoundCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool satisfied = false;
};

struct ClassRegularity {
  std::int64_t ideal_regularity = 0;
  bool in_gamma_set = false;
  bool torsion = false;
};

struct RegularityReport {
  std::int64_t reg = 0;
  std::int64_t red = 0;
  std::size_t f = 0;  // deg K[B]
  std::size_t codim = 0;
  std::size_t dim = 0;
  std::int64_t alpha = 0;
  bool seminormal = false;
  bool normal = false;
  bool cohen_macaulay = false;
  std::vector<ClassRegularity> classes;  // parallel to Decomposition::classes()
  std::vector<std::size_t> gamma_indices;
  std::vector<BoundCheck> bound_checks;
  std::vector<std::string> warnings;

  bool all_bounds_satisfied() const;
};

/// reg K[B] = max_t (reg I_t + deg h_t) together with red, the property
/// flags and every applicable bound check. Bound checks never throw.
RegularityReport regularity_of_semigroup(const Decomposition& decomposition, const HomologyOptions& options = {});
RegularityReport regularity_of_semigroup(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {},
                                         const HomologyOptions& options = {});

}  // namespace semireg
