#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semireg/betti.hpp"
#include "semireg/layers.hpp"
#include "semireg/monomial_ideal.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Compares every primary computation on `presentation` with its oracle:
/// Apery set, reduction number, normality, class count, and the Betti
/// numbers of every proper class ideal. Also reports the bound checks.
std::vector<CheckOutcome> verify_presentation(const SemigroupPresentation& presentation,
                                              const EnumerationCaps& caps = {});

/// betti_table against the Koszul-Tor oracle at every multidegree of the box
/// [0, lcm]; entries off the lcm lattice must vanish.
CheckOutcome verify_betti(const MonomialIdeal& ideal, const HomologyOptions& options = {});

}  // namespace semireg
