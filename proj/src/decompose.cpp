#include "semireg/decompose.hpp"

#include <algorithm>

#include "semireg/errors.hpp"
#include "semireg/lattice.hpp"

namespace semireg {

Decomposition::Decomposition(SemigroupPresentation presentation, AperyDecomposition apery)
    : presentation_(std::move(presentation)), apery_(std::move(apery)) {
  const std::size_t d = presentation_.dimension();
  const std::int64_t alpha = presentation_.alpha();
  for (const auto& rc : apery_.classes()) {
    std::vector<Monomial> exps;
    for (const auto& x : rc.members) {
      Monomial u = x - rc.shift;
      for (std::size_t i = 0; i < d; ++i) {
        if (u[i] < 0 || u[i] % alpha != 0)
          throw InternalError(to_string(x) + " - h_t is not in alpha*N^d");
        u[i] /= alpha;
      }
      exps.push_back(std::move(u));
    }
    MonomialIdeal ideal = minimalize(d, exps);
    if (ideal.generators().size() != rc.members.size())
      throw InternalError("class generators of " + to_string(rc.representative) + " are not minimal");
    if (ideal.is_unit() != (rc.members.size() == 1))
      throw InternalError("unit ideal does not match a singleton class");
    if (!ideal.is_unit()) {
      if (height(ideal) < 2) throw InternalError("proper class ideal of height < 2");
      if (rc.shift_degree < 1) throw InternalError("proper class ideal with shift degree 0");
    }
    classes_.push_back({rc, std::move(ideal)});
  }
}

Decomposition decompose(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  return Decomposition(presentation, apery_set(presentation, caps));
}

namespace {

bool all_coordinates(const AperyDecomposition& apery, auto&& pred) {
  for (const auto& c : apery.classes())
    for (const auto& x : c.members)
      for (auto v : x)
        if (!pred(v)) return false;
  return true;
}

}  // namespace

bool is_seminormal(const AperyDecomposition& apery) {
  const auto alpha = apery.alpha();
  return all_coordinates(apery, [alpha](std::int64_t v) { return v <= alpha; });
}

bool is_normal(const AperyDecomposition& apery) {
  const auto alpha = apery.alpha();
  const bool normal = all_coordinates(apery, [alpha](std::int64_t v) { return v < alpha; });
  if (normal && !is_seminormal(apery)) throw InternalError("normal but not seminormal");
  return normal;
}

bool is_cohen_macaulay(const AperyDecomposition& apery) {
  const auto& cs = apery.classes();
  return std::all_of(cs.begin(), cs.end(), [](const ResidueClass& c) { return c.members.size() == 1; });
}

bool is_seminormal(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  return is_seminormal(apery_set(presentation, caps));
}

bool is_normal(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  return is_normal(apery_set(presentation, caps));
}

bool is_cohen_macaulay(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  return is_cohen_macaulay(apery_set(presentation, caps));
}

bool RegularityReport::all_bounds_satisfied() const {
  return std::all_of(bound_checks.begin(), bound_checks.end(), [](const BoundCheck& b) { return b.satisfied; });
}

RegularityReport regularity_of_semigroup(const Decomposition& decomposition, const HomologyOptions& options) {
  const auto& apery = decomposition.apery();
  const auto& presentation = decomposition.presentation();

  RegularityReport r;
  r.f = decomposition.f();
  r.codim = presentation.codim();
  r.dim = presentation.dimension();
  r.alpha = presentation.alpha();
  r.red = reduction_number(apery);
  r.seminormal = is_seminormal(apery);
  r.normal = is_normal(apery);
  r.cohen_macaulay = is_cohen_macaulay(apery);
  r.warnings = presentation.warnings();

  std::vector<std::int64_t> contribution;
  for (const auto& c : decomposition.classes()) {
    ClassRegularity cr;
    if (!c.ideal.is_unit()) {
      const BettiTable table = betti_table(c.ideal, options);
      cr.ideal_regularity = regularity(table);
      cr.torsion = table.any_torsion();
    }
    contribution.push_back(cr.ideal_regularity + c.residue.shift_degree);
    r.classes.push_back(cr);
  }
  r.reg = *std::max_element(contribution.begin(), contribution.end());
  for (std::size_t t = 0; t < contribution.size(); ++t) {
    if (contribution[t] == r.reg) {
      r.classes[t].in_gamma_set = true;
      r.gamma_indices.push_back(t);
    }
    if (r.classes[t].torsion)
      r.warnings.push_back("class " + std::to_string(t + 1) +
                           ": integral homology has torsion; regularity is reported for characteristic 0");
  }

  const auto f = static_cast<std::int64_t>(r.f);
  const auto c = static_cast<std::int64_t>(r.codim);
  const auto d = static_cast<std::int64_t>(r.dim);
  auto le = [&](std::string name, std::int64_t lhs, std::int64_t rhs) {
    r.bound_checks.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };
  le("red <= reg", r.red, r.reg);
  le("red <= deg - codim", r.red, f - c);
  if (r.seminormal) {
    le("reg <= dim - 1", r.reg, d - 1);
    le("reg <= deg - codim", r.reg, f - c);
    if (d <= 5) r.bound_checks.push_back({"reg == red", r.reg, r.red, r.reg == r.red});
    if (d <= 3) r.bound_checks.push_back({"cohen_macaulay", r.cohen_macaulay ? 1 : 0, 1, r.cohen_macaulay});
  }
  for (std::size_t t = 0; t < decomposition.classes().size(); ++t) {
    const auto& ideal = decomposition.classes()[t].ideal;
    if (ideal.is_unit()) continue;
    const auto bound = supp_and_var(ideal).var - static_cast<std::int64_t>(height(ideal)) + 1;
    le("reg I_" + std::to_string(t + 1) + " <= var - height + 1", r.classes[t].ideal_regularity, bound);
  }
  return r;
}

RegularityReport regularity_of_semigroup(const SemigroupPresentation& presentation, const EnumerationCaps& caps,
                                         const HomologyOptions& options) {
  return regularity_of_semigroup(decompose(presentation, caps), options);
}

}  // namespace semireg
