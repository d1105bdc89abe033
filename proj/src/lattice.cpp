#include "semireg/lattice.hpp"

#include <stdexcept>

#include "semireg/errors.hpp"
#include "semireg/presentation.hpp"

namespace semireg {

Rational degree(const IntVec& x, std::int64_t alpha) {
  Rational q(BigInt(static_cast<long>(x.sum())), BigInt(static_cast<long>(alpha)));
  q.canonicalize();
  return q;
}

std::int64_t integral_degree(const IntVec& x, std::int64_t alpha) {
  const auto s = x.sum();
  if (s % alpha != 0) throw InternalError("non-integral degree for " + to_string(x));
  return s / alpha;
}

IntVec class_representative(const IntVec& x, std::int64_t alpha) {
  IntVec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto m = r[i] % alpha;
    r[i] = m < 0 ? m + alpha : m;
  }
  return r;
}

bool equivalent(const IntVec& x, const IntVec& y, std::int64_t alpha) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if ((x[i] - y[i]) % alpha != 0) return false;
  return true;
}

Lattice::Lattice(std::size_t dimension, std::vector<std::vector<BigInt>> basis)
    : dimension_(dimension), basis_(std::move(basis)) {}

BigInt Lattice::determinant() const {
  BigInt det = 1;
  for (std::size_t i = 0; i < dimension_; ++i) det *= basis_[i][i];
  return det;
}

bool Lattice::contains(const IntVec& x) const {
  if (x.size() != dimension_) return false;
  // forward substitution through the lower triangular basis
  std::vector<BigInt> coeff(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    BigInt rest = static_cast<long>(x[i]);
    for (std::size_t j = 0; j < i; ++j) rest -= basis_[i][j] * coeff[j];
    if (!mpz_divisible_p(rest.get_mpz_t(), basis_[i][i].get_mpz_t())) return false;
    coeff[i] = rest / basis_[i][i];
  }
  return true;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

void combine_columns(Matrix& m, std::size_t i, std::size_t j, std::size_t row) {
  // unimodular 2x2 column operation zeroing m[row][j] against m[row][i]
  const BigInt a = m[row][i];
  const BigInt b = m[row][j];
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const BigInt a_g = a / g;
  const BigInt b_g = b / g;
  for (auto& r : m) {
    const BigInt ci = r[i];
    const BigInt cj = r[j];
    r[i] = s * ci + t * cj;
    r[j] = a_g * cj - b_g * ci;
  }
}

}  // namespace

Lattice lattice_from_generators(std::span<const IntVec> gens) {
  if (gens.empty()) throw std::invalid_argument("lattice_from_generators: no generators");
  const std::size_t d = gens.front().size();
  const std::size_t n = gens.size();
  if (n < d) throw std::invalid_argument("lattice_from_generators: rank deficient");

  Matrix m(d, std::vector<BigInt>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (gens[j].size() != d) throw std::invalid_argument("lattice_from_generators: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i) m[i][j] = static_cast<long>(gens[j][i]);
  }

  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t j = row + 1; j < n; ++j) {
      if (m[row][j] == 0) continue;
      if (m[row][row] == 0) {
        for (auto& r : m) std::swap(r[row], r[j]);
        continue;
      }
      combine_columns(m, row, j, row);
    }
    if (m[row][row] == 0) throw std::invalid_argument("lattice_from_generators: rank deficient");
    if (m[row][row] < 0)
      for (auto& r : m) r[row] = -r[row];
    for (std::size_t j = 0; j < row; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), m[row][j].get_mpz_t(), m[row][row].get_mpz_t());
      if (q != 0)
        for (auto& r : m) r[j] -= q * r[row];
    }
  }

  Matrix basis(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) basis[i][j] = m[i][j];
    for (std::size_t j = d; j < n; ++j)
      if (m[i][j] != 0) throw InternalError("HNF left a nonzero surplus column");
  }
  return Lattice(d, std::move(basis));
}

BigInt class_count(const SemigroupPresentation& presentation) {
  const auto gens = presentation.generators();
  const Lattice lattice = lattice_from_generators(gens);
  BigInt volume;
  mpz_ui_pow_ui(volume.get_mpz_t(), static_cast<unsigned long>(presentation.alpha()),
                static_cast<unsigned long>(presentation.dimension()));
  const BigInt det = lattice.determinant();
  if (!mpz_divisible_p(volume.get_mpz_t(), det.get_mpz_t()))
    throw InternalError("alpha^d is not a multiple of det G(B)");
  return volume / det;
}

}  // namespace semireg
