#include "semireg/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "semireg/errors.hpp"
#include "semireg/smith.hpp"

namespace semireg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool SimplicialComplex::has_face(std::uint64_t mask) const {
  return std::binary_search(faces.begin(), faces.end(), mask, [](std::uint64_t a, std::uint64_t b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const IntVec& b) {
  const std::size_t d = ideal.ambient();
  if (b.size() != d || !b.is_nonnegative()) throw std::invalid_argument("upper_koszul_complex: bad multidegree");
  if (d > 63) throw std::invalid_argument("upper_koszul_complex: too many variables");

  std::uint64_t allowed = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (b[i] > 0) allowed |= std::uint64_t{1} << i;

  SimplicialComplex k;
  k.vertices = d;
  // iterate over the subsets of `allowed`
  for (std::uint64_t s = allowed;; s = (s - 1) & allowed) {
    IntVec rest = b;
    for (std::size_t i = 0; i < d; ++i)
      if (s >> i & 1) rest[i] -= 1;
    if (ideal.contains(rest)) k.faces.push_back(s);
    if (s == 0) break;
  }
  std::sort(k.faces.begin(), k.faces.end(), [](std::uint64_t a, std::uint64_t c) {
    const int pa = __builtin_popcountll(a);
    const int pc = __builtin_popcountll(c);
    return pa != pc ? pa < pc : a < c;
  });

  for (auto f : k.faces)
    for (std::size_t i = 0; i < d; ++i)
      if ((f >> i & 1) && !k.has_face(f & ~(std::uint64_t{1} << i)))
        throw InternalError("upper Koszul complex is not closed under subsets");
  return k;
}

ReducedHomology reduced_homology(const SimplicialComplex& complex, Field field) {
  const std::size_t n = complex.vertices;
  ReducedHomology out;
  out.ranks.assign(n + 1, 0);
  out.torsion.assign(n + 1, false);
  if (complex.is_void()) return out;

  // chains[k + 1] lists the faces of dimension k, i.e. cardinality k + 1
  std::vector<std::vector<std::uint64_t>> chains(n + 1);
  for (auto f : complex.faces) chains[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);

  // boundary[k + 1] : C_k -> C_{k-1}, for k = 0..n-1; boundary of C_{-1} is 0
  std::vector<std::size_t> boundary_rank(n + 2, 0);
  std::vector<bool> boundary_torsion(n + 2, false);
  for (std::size_t card = 1; card <= n; ++card) {
    const auto& src = chains[card];
    const auto& dst = chains[card - 1];
    if (src.empty() || dst.empty()) continue;
    IntMatrix m(dst.size(), std::vector<BigInt>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int sign = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(src[c] >> v & 1)) continue;
        const auto face = src[c] & ~(std::uint64_t{1} << v);
        const auto row = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), face) - dst.begin());
        if (row == dst.size() || dst[row] != face) throw InternalError("boundary face missing from complex");
        m[row][c] = sign;
        sign = -sign;
      }
    }
    if (field.characteristic == 0) {
      const SmithForm snf = smith_normal_form(std::move(m));
      boundary_rank[card] = snf.rank;
      boundary_torsion[card] = snf.has_torsion();
    } else {
      boundary_rank[card] = rank_mod_p(m, field.characteristic);
    }
  }

  // H~_k = dim C_k - rank(d_k) - rank(d_{k+1}); d_k has index card = k + 1
  for (std::size_t card = 0; card <= n; ++card) {
    const auto dim = static_cast<std::int64_t>(chains[card].size());
    const auto in = card + 1 <= n ? static_cast<std::int64_t>(boundary_rank[card + 1]) : 0;
    out.ranks[card] = dim - static_cast<std::int64_t>(boundary_rank[card]) - in;
    out.torsion[card] = card + 1 <= n && boundary_torsion[card + 1];
  }
  return out;
}

}  // namespace semireg
