#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "semireg/homology.hpp"
#include "semireg/int_vec.hpp"
#include "semireg/monomial_ideal.hpp"

namespace semireg {

struct HomologyOptions {
  Field field;
  /// Refuse ideals whose generator subsets exceed this count.
  std::size_t max_subsets = std::size_t{1} << 20;
};

struct BettiEntry {
  std::int64_t rank = 0;
  /// Integral homology at this multidegree has torsion, so the rank may
  /// differ in some positive characteristic.
  bool torsion = false;
};

// Multigraded Betti numbers beta_{i,b}(I), keyed by (i, b). Only entries with
// nonzero rank or a torsion flag are stored.
class BettiTable {
 public:
  using Key = std::pair<int, IntVec>;

  const std::map<Key, BettiEntry>& entries() const noexcept { return entries_; }
  std::int64_t rank(int i, const IntVec& b) const;
  void set(int i, const IntVec& b, BettiEntry entry);
  bool any_torsion() const;

 private:
  std::map<Key, BettiEntry> entries_;
};

/// Distinct lcms of nonempty subsets of the minimal generators, sorted.
std::vector<IntVec> lcm_lattice(const MonomialIdeal& ideal, const HomologyOptions& options = {});

/// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) over every lcm-lattice multidegree b.
/// Throws std::invalid_argument for the unit ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const HomologyOptions& options = {});

/// max{|b| - i : beta_{i,b} != 0}.
std::int64_t regularity(const BettiTable& table);

/// Castelnuovo-Mumford regularity of I as a graded T-module; 0 for I = T.
std::int64_t regularity(const MonomialIdeal& ideal, const HomologyOptions& options = {});

}  // namespace semireg
