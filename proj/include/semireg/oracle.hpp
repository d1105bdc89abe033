#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "semireg/int_vec.hpp"
#include "semireg/layers.hpp"
#include "semireg/monomial_ideal.hpp"
#include "semireg/presentation.hpp"

// Brute-force reference implementations. Nothing here calls into the Apery
// enumeration, the HNF, or the simplicial Betti engine.
namespace semireg::oracle {

/// G(B) intersected with [0, alpha)^d, found as the subgroup of (Z/alpha)^d
/// generated by the generator residues.
std::set<IntVec> residue_representatives(const SemigroupPresentation& presentation);

/// B_A by its definition: every x in B up to degree f - c such that x - a is
/// outside B for every a in A \ {0} with deg a <= deg x.
std::set<IntVec> apery_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

/// Smallest r with layer(r) + {alpha*e_i} = layer(r+1).
std::int64_t reduction_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

/// Every representative of G(B) in [0, alpha)^d lies in B.
bool normality_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps = {});

/// beta_{i,b}(I) for i = 0..d-1 from the homology of the Koszul complex of
/// T/I in multidegree b, computed over Q by Gaussian elimination.
std::vector<std::int64_t> betti_oracle_koszul_tor(const MonomialIdeal& ideal, const IntVec& b);

}  // namespace semireg::oracle
