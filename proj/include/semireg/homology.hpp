#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semireg/int_vec.hpp"
#include "semireg/monomial_ideal.hpp"

namespace semireg {

/// Coefficient field for homology: 0 means Q (via Smith normal form over Z),
/// otherwise a prime p.
struct Field {
  std::uint64_t characteristic = 0;
};

bool is_prime(std::uint64_t n);

// Abstract simplicial complex on vertices 0..vertices-1, faces encoded as
// bitmasks and sorted by (cardinality, mask). The empty face is mask 0; a
// complex without any face is the void complex.
struct SimplicialComplex {
  std::size_t vertices = 0;
  std::vector<std::uint64_t> faces;

  bool is_void() const noexcept { return faces.empty(); }
  bool has_face(std::uint64_t mask) const;
};

/// K^b(I): faces are the 0/1 vectors s with b - s >= 0 and y^(b-s) in I.
/// Closure under subsets is checked and throws InternalError on failure.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const IntVec& b);

struct ReducedHomology {
  /// ranks[k + 1] = dim H~_k for k = -1 .. vertices-1.
  std::vector<std::int64_t> ranks;
  /// torsion[k + 1]: H~_k(K; Z) has torsion (only filled over Q).
  std::vector<bool> torsion;

  std::int64_t rank(int k) const { return ranks.at(static_cast<std::size_t>(k + 1)); }
  bool has_torsion(int k) const { return torsion.at(static_cast<std::size_t>(k + 1)); }
};

/// Reduced simplicial homology with H~_{-1}({empty}) one-dimensional and
/// every group of the void complex zero.
ReducedHomology reduced_homology(const SimplicialComplex& complex, Field field = {});

}  // namespace semireg
