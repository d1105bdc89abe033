#include "semireg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "semireg/bigint.hpp"
#include "semireg/errors.hpp"

namespace semireg::oracle {

namespace {

IntVec reduce_mod(IntVec x, std::int64_t alpha) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((x[i] % alpha) + alpha) % alpha;
  return x;
}

bool member(const LayeredMembership& layers, const IntVec& x, std::int64_t alpha) {
  if (!x.is_nonnegative()) return false;
  const auto s = x.sum();
  return s % alpha == 0 && layers.layer_contains(s / alpha, x);
}

// all u in N^d with 1 <= |u| <= max_total
void nonzero_points(std::size_t d, std::int64_t max_total, std::vector<IntVec>& out) {
  IntVec cur = IntVec::zero(d);
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t budget) -> void {
    if (pos == d) {
      if (!cur.is_zero()) out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= budget; ++v) {
      cur[pos] = v;
      self(self, pos + 1, budget - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_total);
}

std::int64_t enumeration_bound(const SemigroupPresentation& presentation) {
  return static_cast<std::int64_t>(residue_representatives(presentation).size()) -
         static_cast<std::int64_t>(presentation.codim());
}

}  // namespace

std::set<IntVec> residue_representatives(const SemigroupPresentation& presentation) {
  const auto alpha = presentation.alpha();
  std::set<IntVec> group{IntVec::zero(presentation.dimension())};
  std::vector<IntVec> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& x : frontier)
      for (const auto& g : presentation.interior()) {
        IntVec y = reduce_mod(x + g, alpha);
        if (group.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return group;
}

std::set<IntVec> apery_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  const auto alpha = presentation.alpha();
  const auto d = presentation.dimension();
  const auto top = enumeration_bound(presentation);
  const auto layers = LayeredMembership::build(presentation, top, caps);

  std::vector<IntVec> shifts;
  nonzero_points(d, top, shifts);
  for (auto& u : shifts)
    for (std::size_t i = 0; i < d; ++i) u[i] *= alpha;

  std::set<IntVec> out;
  for (std::int64_t n = 0; n <= top; ++n)
    for (const auto& x : layers.layer(n)) {
      const bool apery = std::none_of(shifts.begin(), shifts.end(), [&](const IntVec& a) {
        return componentwise_le(a, x) && member(layers, x - a, alpha);
      });
      if (apery) out.insert(x);
    }
  return out;
}

std::int64_t reduction_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  const auto top = enumeration_bound(presentation) + 1;
  const auto layers = LayeredMembership::build(presentation, top, caps);
  for (std::int64_t r = 0; r < top; ++r) {
    std::set<IntVec> shifted;
    for (const auto& x : layers.layer(r))
      for (const auto& e : presentation.corners()) shifted.insert(x + e);
    const auto& next = layers.layer(r + 1);
    if (shifted == std::set<IntVec>(next.begin(), next.end())) return r;
  }
  throw InternalError("layer saturation not reached by degree f - c + 1");
}

bool normality_oracle(const SemigroupPresentation& presentation, const EnumerationCaps& caps) {
  const auto reps = residue_representatives(presentation);
  const auto alpha = presentation.alpha();
  std::int64_t top = 0;
  for (const auto& r : reps) top = std::max(top, r.sum() / alpha);
  const auto layers = LayeredMembership::build(presentation, top, caps);
  return std::all_of(reps.begin(), reps.end(), [&](const IntVec& r) { return member(layers, r, alpha); });
}

namespace {

std::size_t rank_over_q(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::int64_t> betti_oracle_koszul_tor(const MonomialIdeal& ideal, const IntVec& b) {
  const std::size_t d = ideal.ambient();
  if (b.size() != d || !b.is_nonnegative()) throw std::invalid_argument("betti_oracle_koszul_tor: bad multidegree");
  if (d > 20) throw std::invalid_argument("betti_oracle_koszul_tor: too many variables");

  auto in_ideal = [&](const IntVec& u) {
    for (const auto& g : ideal.generators()) {
      bool divides = true;
      for (std::size_t i = 0; i < d; ++i)
        if (g[i] > u[i]) divides = false;
      if (divides) return true;
    }
    return false;
  };

  // basis[i]: subsets s of size i with y^(b - s) a nonzero monomial of T/I
  std::vector<std::vector<unsigned>> basis(d + 1);
  for (unsigned s = 0; s < (1u << d); ++s) {
    IntVec u = b;
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i)
      if (s >> i & 1) {
        if (u[i] == 0) ok = false;
        u[i] -= 1;
      }
    if (ok && !in_ideal(u)) basis[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  }

  // Koszul differential e_s -> sum_k (-1)^k y_{s_k} e_{s \ s_k}
  std::vector<std::size_t> diff_rank(d + 2, 0);
  for (std::size_t i = 1; i <= d; ++i) {
    const auto& src = basis[i];
    const auto& dst = basis[i - 1];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<Rational>> m(dst.size(), std::vector<Rational>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int pos = 0;
      for (std::size_t v = 0; v < d; ++v) {
        if (!(src[c] >> v & 1)) continue;
        const unsigned face = src[c] & ~(1u << v);
        auto it = std::find(dst.begin(), dst.end(), face);
        if (it != dst.end()) m[static_cast<std::size_t>(it - dst.begin())][c] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    diff_rank[i] = rank_over_q(std::move(m));
  }

  // Tor_i(T/I)_b = dim basis[i] - rank d_i - rank d_{i+1}; beta_i(I) = Tor_{i+1}(T/I)
  std::vector<std::int64_t> out(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t q = i + 1;
    out[i] = static_cast<std::int64_t>(basis[q].size()) - static_cast<std::int64_t>(diff_rank[q]) -
             static_cast<std::int64_t>(q + 1 <= d ? diff_rank[q + 1] : 0);
  }
  return out;
}

}  // namespace semireg::oracle
