#include "semireg/int_vec.hpp"

#include <algorithm>
#include <stdexcept>

namespace semireg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("IntVec coordinate overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("IntVec coordinate overflow");
  return out;
}

}  // namespace

IntVec IntVec::unit(std::size_t d, std::size_t i, value_type scale) {
  IntVec v = zero(d);
  v.coords_.at(i) = scale;
  return v;
}

IntVec::value_type IntVec::sum() const {
  value_type s = 0;
  for (auto c : coords_) s = checked_add(s, c);
  return s;
}

bool IntVec::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool IntVec::is_nonnegative() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c >= 0; });
}

IntVec& IntVec::operator+=(const IntVec& other) {
  if (other.size() != size()) throw std::invalid_argument("IntVec dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  if (other.size() != size()) throw std::invalid_argument("IntVec dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

bool componentwise_le(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec componentwise_min(const IntVec& a, const IntVec& b) {
  IntVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

IntVec componentwise_max(const IntVec& a, const IntVec& b) {
  IntVec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::string to_string(const IntVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::size_t IntVecHash::operator()(const IntVec& x) const noexcept {
  // FNV-1a over the coordinates
  std::uint64_t h = 1469598103934665603ull;
  for (auto c : x) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace semireg
