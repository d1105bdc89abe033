#include "semireg/veronese.hpp"

#include <set>
#include <stdexcept>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

void check(VeroneseParams p) {
  if (p.d < 1 || p.alpha < 1) throw std::invalid_argument("Veronese parameters must be positive");
}

void compositions(std::int64_t remaining, std::size_t pos, IntVec& cur, std::vector<IntVec>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(remaining - v, pos + 1, cur, out);
  }
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::set<IntVec> minkowski(const std::set<IntVec>& a, const std::vector<IntVec>& b) {
  std::set<IntVec> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(x + y);
  return out;
}

}  // namespace

std::vector<IntVec> veronese_generators(VeroneseParams p) {
  check(p);
  std::vector<IntVec> out;
  IntVec cur = IntVec::zero(static_cast<std::size_t>(p.d));
  compositions(p.alpha, 0, cur, out);
  return out;
}

SemigroupPresentation veronese_presentation(VeroneseParams p) {
  return validate(veronese_generators(p), static_cast<std::size_t>(p.d), p.alpha);
}

std::int64_t veronese_regularity(VeroneseParams p) {
  check(p);
  return p.d * (p.alpha - 1) / p.alpha;
}

DegreeCodim veronese_deg_codim(VeroneseParams p) {
  check(p);
  if (p.d == 1 || p.alpha == 1) throw std::invalid_argument("degenerate Veronese parameters (d = 1 or alpha = 1)");
  DegreeCodim out;
  mpz_ui_pow_ui(out.degree.get_mpz_t(), static_cast<unsigned long>(p.alpha), static_cast<unsigned long>(p.d - 1));
  out.codim = binomial(p.alpha + p.d - 1, p.d - 1) - static_cast<long>(p.d);
  return out;
}

SaturationResult saturation_check(VeroneseParams p, std::int64_t r, std::size_t literal_cap) {
  check(p);
  if (r < 0) throw std::invalid_argument("saturation_check: negative r");
  SaturationResult out;
  out.holds = (r + 1) * p.alpha > p.d * (p.alpha - 1);

  if (binomial((r + 1) * p.alpha + p.d - 1, p.d - 1) > static_cast<unsigned long>(literal_cap)) return out;

  const auto gens = veronese_generators(p);
  std::vector<IntVec> corners;
  for (std::int64_t i = 0; i < p.d; ++i)
    corners.push_back(IntVec::unit(static_cast<std::size_t>(p.d), static_cast<std::size_t>(i), p.alpha));

  std::set<IntVec> r_fold{IntVec::zero(static_cast<std::size_t>(p.d))};
  for (std::int64_t n = 0; n < r; ++n) r_fold = minkowski(r_fold, gens);
  const bool literal = minkowski(r_fold, corners) == minkowski(r_fold, gens);
  if (literal != out.holds)
    throw InternalError("saturation: set equality and inequality disagree at r = " + std::to_string(r));
  out.literal_checked = true;
  return out;
}

}  // namespace semireg
