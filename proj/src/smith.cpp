#include "semireg/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace semireg {

bool SmithForm::has_torsion() const {
  return std::any_of(invariant_factors.begin(), invariant_factors.end(), [](const BigInt& f) { return f != 1; });
}

namespace {

// Locates the nonzero entry of smallest absolute value in the trailing
// submatrix starting at (k, k).
bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t i = k; i < m.size(); ++i)
    for (std::size_t j = k; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs(m[i][j]);
      if (!found || a < best) {
        best = a;
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, k, pr, pc)) break;
    std::swap(m[k], m[pr]);
    for (auto& row : m) std::swap(row[k], row[pc]);

    for (;;) {
      bool clean = true;
      // clear column k
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][k].get_mpz_t(), m[k][k].get_mpz_t());
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      // clear row k
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[k][j].get_mpz_t(), m[k][k].get_mpz_t());
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (clean) {
        // the pivot must divide the rest of the trailing block
        bool divides = true;
        for (std::size_t i = k + 1; i < rows && divides; ++i)
          for (std::size_t j = k + 1; j < cols; ++j)
            if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[k][k].get_mpz_t())) {
              for (std::size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
              divides = false;
              break;
            }
        if (divides) break;
      }
      std::size_t r = k, c = k;
      find_pivot(m, k, r, c);
      std::swap(m[k], m[r]);
      for (auto& row : m) std::swap(row[k], row[c]);
    }
    out.invariant_factors.push_back(abs(m[k][k]));
    ++out.rank;
  }
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: characteristic must be a prime");
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const BigInt modulus = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), m[i][j].get_mpz_t(), modulus.get_mpz_t());
      a[i][j] = r.get_ui();
    }

  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto inverse = [&](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = inverse(a[rank][c]);
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const std::uint64_t factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(factor, a[rank][j])) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace semireg
