#include "semireg/verify.hpp"

#include <set>

#include "semireg/apery.hpp"
#include "semireg/decompose.hpp"
#include "semireg/lattice.hpp"
#include "semireg/oracle.hpp"

namespace semireg {

namespace {

CheckOutcome compare(std::string name, std::int64_t primary, std::int64_t reference) {
  return {std::move(name), primary == reference,
          "primary " + std::to_string(primary) + ", oracle " + std::to_string(reference)};
}

void box_points(const IntVec& top, std::size_t pos, IntVec& cur, std::vector<IntVec>& out) {
  if (pos == top.size()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= top[pos]; ++v) {
    cur[pos] = v;
    box_points(top, pos + 1, cur, out);
  }
}

}  // namespace

CheckOutcome verify_betti(const MonomialIdeal& ideal, const HomologyOptions& options) {
  const std::string name = "betti " + to_string(ideal);
  const BettiTable table = betti_table(ideal, options);
  std::vector<IntVec> points;
  IntVec cur = IntVec::zero(ideal.ambient());
  box_points(ideal.lcm(), 0, cur, points);
  for (const auto& b : points) {
    const auto reference = oracle::betti_oracle_koszul_tor(ideal, b);
    for (std::size_t i = 0; i < reference.size(); ++i) {
      const auto primary = table.rank(static_cast<int>(i), b);
      if (primary != reference[i])
        return {name, false,
                "beta_" + std::to_string(i) + "," + to_string(b) + ": primary " + std::to_string(primary) +
                    ", oracle " + std::to_string(reference[i])};
    }
  }
  return {name, true, std::to_string(points.size()) + " multidegrees"};
}

std::vector<CheckOutcome> verify_presentation(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  std::vector<CheckOutcome> out;
  const Decomposition dec = decompose(presentation, caps);
  const auto& apery = dec.apery();

  const auto primary_set = apery.elements();
  const auto reference_set = oracle::apery_oracle(presentation, caps);
  out.push_back({"apery set", std::set<IntVec>(primary_set.begin(), primary_set.end()) == reference_set,
                 std::to_string(primary_set.size()) + " primary elements, " + std::to_string(reference_set.size()) +
                     " oracle elements"});
  out.push_back(compare("reduction number", reduction_number(apery), oracle::reduction_oracle(presentation, caps)));
  out.push_back(compare("normality", is_normal(apery), oracle::normality_oracle(presentation, caps)));
  out.push_back(compare("class count", class_count(presentation).get_si(),
                        static_cast<std::int64_t>(oracle::residue_representatives(presentation).size())));
  for (const auto& c : dec.classes())
    if (!c.ideal.is_unit()) out.push_back(verify_betti(c.ideal));

  const auto report = regularity_of_semigroup(dec);
  for (const auto& b : report.bound_checks)
    out.push_back({"bound " + b.name, b.satisfied, std::to_string(b.lhs) + " vs " + std::to_string(b.rhs)});
  return out;
}

}  // namespace semireg
