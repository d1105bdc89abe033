#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semireg/int_vec.hpp"

namespace semireg {

/// Exponent vector u of y^u in T = K[y_1..y_d]; entries are nonnegative.
using Monomial = IntVec;

// Monomial ideal of T given by its minimal generators.
class MonomialIdeal {
 public:
  std::size_t ambient() const noexcept { return ambient_; }
  /// Minimal generators in descending lexicographic order (y1 before y2).
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_unit() const noexcept { return unit_; }
  /// y^u lies in the ideal.
  bool contains(const Monomial& u) const;
  /// lcm of the minimal generators.
  Monomial lcm() const;

  friend MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);

 private:
  std::size_t ambient_ = 0;
  std::vector<Monomial> gens_;
  bool unit_ = false;
};

/// Removes every generator divisible by another one. Throws
/// std::invalid_argument on an empty or negative generator list.
MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens);

struct Support {
  std::vector<std::size_t> indices;  // 0-based variable indices
  std::int64_t var = 0;              // total degree of the lcm
};

Support supp_and_var(const MonomialIdeal& ideal);

/// Smallest set of variables meeting the support of every generator.
/// Throws std::invalid_argument for the unit ideal.
std::size_t height(const MonomialIdeal& ideal);

bool is_squarefree(const MonomialIdeal& ideal);

/// "(y1*y2, y3^2)", or "T" for the unit ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace semireg
