#include "semireg/betti.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "semireg/errors.hpp"

namespace semireg {

std::int64_t BettiTable::rank(int i, const IntVec& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second.rank;
}

void BettiTable::set(int i, const IntVec& b, BettiEntry entry) { entries_[{i, b}] = entry; }

bool BettiTable::any_torsion() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.torsion; });
}

std::vector<IntVec> lcm_lattice(const MonomialIdeal& ideal, const HomologyOptions& options) {
  const auto& gens = ideal.generators();
  if (gens.size() >= 63 || (std::size_t{1} << gens.size()) - 1 > options.max_subsets)
    throw CapExceeded(std::to_string(gens.size()) + " generators exceed the subset cap of " +
                      std::to_string(options.max_subsets));
  std::set<IntVec> lcms;
  for (const auto& g : gens) {
    std::vector<IntVec> grown;
    for (const auto& l : lcms) grown.push_back(componentwise_max(l, g));
    lcms.insert(grown.begin(), grown.end());
    lcms.insert(g);
  }
  return {lcms.begin(), lcms.end()};
}

BettiTable betti_table(const MonomialIdeal& ideal, const HomologyOptions& options) {
  if (ideal.is_unit()) throw std::invalid_argument("betti_table of the unit ideal");
  if (options.field.characteristic != 0 && !is_prime(options.field.characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime");

  BettiTable table;
  for (const auto& b : lcm_lattice(ideal, options)) {
    const auto h = reduced_homology(upper_koszul_complex(ideal, b), options.field);
    for (int k = -1; k < static_cast<int>(ideal.ambient()); ++k) {
      const bool torsion = h.has_torsion(k) || (k >= 0 && h.has_torsion(k - 1));
      if (h.rank(k) != 0 || torsion) table.set(k + 1, b, {h.rank(k), torsion});
    }
  }
  return table;
}

std::int64_t regularity(const BettiTable& table) {
  std::int64_t reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, entry] : table.entries())
    if (entry.rank != 0) reg = std::max(reg, key.second.sum() - key.first);
  if (reg == std::numeric_limits<std::int64_t>::min()) throw InternalError("Betti table without nonzero entries");
  return reg;
}

std::int64_t regularity(const MonomialIdeal& ideal, const HomologyOptions& options) {
  if (ideal.is_unit()) return 0;
  return regularity(betti_table(ideal, options));
}

}  // namespace semireg
