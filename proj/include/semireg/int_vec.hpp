#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace semireg {

// Point of Z^d. Arithmetic is overflow-checked and throws std::overflow_error.
class IntVec {
 public:
  using value_type = std::int64_t;

  IntVec() = default;
  IntVec(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit IntVec(std::vector<value_type> coords) : coords_(std::move(coords)) {}

  static IntVec zero(std::size_t d) { return IntVec(std::vector<value_type>(d, 0)); }
  static IntVec unit(std::size_t d, std::size_t i, value_type scale = 1);

  std::size_t size() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<value_type>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  value_type sum() const;
  bool is_zero() const noexcept;
  bool is_nonnegative() const noexcept;

  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);

  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }

  friend bool operator==(const IntVec&, const IntVec&) = default;
  friend auto operator<=>(const IntVec&, const IntVec&) = default;

 private:
  std::vector<value_type> coords_;
};

/// a[i] <= b[i] for every i.
bool componentwise_le(const IntVec& a, const IntVec& b);

IntVec componentwise_min(const IntVec& a, const IntVec& b);
IntVec componentwise_max(const IntVec& a, const IntVec& b);

/// "(3,1)"
std::string to_string(const IntVec& x);

struct IntVecHash {
  std::size_t operator()(const IntVec& x) const noexcept;
};

}  // namespace semireg
