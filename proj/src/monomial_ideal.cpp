#include "semireg/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace semireg {

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return componentwise_le(g, u); });
}

Monomial MonomialIdeal::lcm() const {
  Monomial out = Monomial::zero(ambient_);
  for (const auto& g : gens_) out = componentwise_max(out, g);
  return out;
}

MonomialIdeal minimalize(std::size_t ambient, std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("minimalize: no generators");
  for (const auto& g : gens)
    if (g.size() != ambient || !g.is_nonnegative())
      throw std::invalid_argument("minimalize: bad exponent " + to_string(g));

  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto sa = a.sum();
    const auto sb = b.sum();
    return sa != sb ? sa < sb : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal ideal;
  ideal.ambient_ = ambient;
  for (const auto& g : gens) {
    // lower total degree first, so only earlier entries can divide g
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [&](const Monomial& h) { return componentwise_le(h, g); });
    if (!redundant) ideal.gens_.push_back(g);
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end(), std::greater<>{});
  ideal.unit_ = ideal.gens_.size() == 1 && ideal.gens_.front().is_zero();
  return ideal;
}

Support supp_and_var(const MonomialIdeal& ideal) {
  Support s;
  const Monomial l = ideal.lcm();
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] > 0) s.indices.push_back(i);
  s.var = l.sum();
  return s;
}

std::size_t height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("height of the unit ideal");
  const std::size_t d = ideal.ambient();
  if (d > 30) throw std::invalid_argument("height: too many variables for exhaustive search");

  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::uint32_t cover = 0; cover < (1u << d); ++cover) {
      if (static_cast<std::size_t>(__builtin_popcount(cover)) != k) continue;
      if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & cover) != 0; }))
        return k;
    }
  }
  throw std::logic_error("height: no vertex cover");
}

bool is_squarefree(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    for (auto e : g)
      if (e > 1) return false;
  return true;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return "T";
  std::string s = "(";
  bool first_gen = true;
  for (const auto& g : ideal.generators()) {
    if (!first_gen) s += ", ";
    first_gen = false;
    bool first_var = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!first_var) s += '*';
      first_var = false;
      s += "y" + std::to_string(i + 1);
      if (g[i] > 1) s += "^" + std::to_string(g[i]);
    }
  }
  return s + ")";
}

}  // namespace semireg
