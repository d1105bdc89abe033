#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semireg/bigint.hpp"
#include "semireg/int_vec.hpp"

namespace semireg {

class SemigroupPresentation;

/// (sum of coordinates) / alpha, exact.
Rational degree(const IntVec& x, std::int64_t alpha);

/// Degree of an element known to lie in G(B); throws InternalError if the
/// coordinate sum is not a multiple of alpha.
std::int64_t integral_degree(const IntVec& x, std::int64_t alpha);

/// Componentwise nonnegative residue modulo alpha; lies in [0, alpha)^d.
IntVec class_representative(const IntVec& x, std::int64_t alpha);

/// x - y lies in alpha * Z^d.
bool equivalent(const IntVec& x, const IntVec& y, std::int64_t alpha);

// Full-rank sublattice of Z^d. The basis is stored column-wise in lower
// triangular Hermite normal form: positive diagonal, entries left of the
// diagonal reduced into [0, diagonal).
class Lattice {
 public:
  Lattice(std::size_t dimension, std::vector<std::vector<BigInt>> basis);

  std::size_t dimension() const noexcept { return dimension_; }
  /// basis()[row][col]; column j is the j-th basis vector.
  const std::vector<std::vector<BigInt>>& basis() const noexcept { return basis_; }
  BigInt determinant() const;
  bool contains(const IntVec& x) const;

 private:
  std::size_t dimension_;
  std::vector<std::vector<BigInt>> basis_;
};

/// HNF basis of the integer span of `gens`. Throws std::invalid_argument if
/// the span is not full rank.
Lattice lattice_from_generators(std::span<const IntVec> gens);

/// Number of residue classes of G(B) modulo alpha * Z^d, alpha^d / det.
BigInt class_count(const SemigroupPresentation& presentation);

}  // namespace semireg
