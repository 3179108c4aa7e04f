#pragma once

// Random generators for property tests.  Everything is seeded explicitly so
// failures reproduce.

#include <cstdint>
#include <random>

#include <algorithm>
#include <map>

#include "bicomplex/bicomplex_matrix.hpp"
#include "bicomplex/jordan.hpp"

namespace bicx::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)); }

  /// p/q with |p| <= bound, 1 <= q <= den.
  Rational rational(int bound = 9, int den = 4) {
    Rational q(mpz_class(integer(-bound, bound)), mpz_class(integer(1, den)));
    q.canonicalize();
    return q;
  }

  ComplexQ complex_q(int bound = 9, int den = 4) { return {rational(bound, den), rational(bound, den)}; }
  ComplexQ gaussian_integer(int bound = 3) { return {Rational(integer(-bound, bound)), Rational(integer(-bound, bound))}; }
  ComplexD complex_d(double r = 1.0) { return {real(-r, r), real(-r, r)}; }

  BicomplexQ scalar_q(int bound = 9, int den = 4) {
    ComplexQ c1 = complex_q(bound, den);
    return BicomplexQ::from_idempotent(std::move(c1), complex_q(bound, den));
  }
  BicomplexD scalar_d(double r = 1.0) {
    const ComplexD c1 = complex_d(r);
    return BicomplexD::from_idempotent(c1, complex_d(r));
  }

  MatrixQ matrix_q(std::size_t r, std::size_t c, int bound = 5, int den = 3) {
    MatrixQ m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_q(bound, den);
    return m;
  }
  MatrixD matrix_d(std::size_t r, std::size_t c, double scale = 1.0) {
    MatrixD m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_d(scale);
    return m;
  }

  BicomplexMatrixQ bmatrix_q(std::size_t r, std::size_t c, int bound = 5, int den = 3) {
    return {matrix_q(r, c, bound, den), matrix_q(r, c, bound, den)};
  }
  BicomplexMatrixD bmatrix_d(std::size_t r, std::size_t c, double scale = 1.0) {
    return {matrix_d(r, c, scale), matrix_d(r, c, scale)};
  }

  /// Hermitian H = (M + M*)/2.
  MatrixD hermitian(std::size_t n, double scale = 1.0) {
    const MatrixD m = matrix_d(n, n, scale);
    return (m + m.adjoint()) * ComplexD(0.5);
  }

  /// Integer unimodular-ish matrix: unit lower times unit upper triangular
  /// with small Gaussian-integer entries, so inverses stay small and exact.
  MatrixQ well_conditioned_q(std::size_t n) {
    MatrixQ l = MatrixQ::identity(n), u = MatrixQ::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) {
        l(i, k) = gaussian_integer(2);
        u(k, i) = gaussian_integer(2);
      }
    return l * u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Eigenvalue -> block sizes sorted descending.
using BlockMultiset = std::map<std::pair<Rational, Rational>, std::vector<std::size_t>>;

inline BlockMultiset block_multiset(const std::vector<JordanBlock>& blocks) {
  BlockMultiset out;
  for (const auto& b : blocks) out[{b.eigenvalue.re, b.eigenvalue.im}].push_back(b.size);
  for (auto& [k, v] : out) std::sort(v.rbegin(), v.rend());
  return out;
}

/// Random Jordan structure of total size n.  Eigenvalues come from a small
/// pool so repeated eigenvalues with several blocks are common.
inline std::vector<JordanBlock> random_jordan_blocks(Gen& g, std::size_t n) {
  std::vector<ComplexQ> pool;
  for (int k = 0; k < 3; ++k) {
    ComplexQ z = g.gaussian_integer(2);
    if (g.integer(0, 3) == 0) {
      Rational half(mpz_class(g.integer(-3, 3)), mpz_class(2));
      half.canonicalize();
      z = ComplexQ(half);
    }
    pool.push_back(z);
  }
  std::vector<JordanBlock> blocks;
  std::size_t offset = 0;
  while (offset < n) {
    JordanBlock b;
    b.size = 1 + static_cast<std::size_t>(g.integer(0, static_cast<int>(n - offset) - 1));
    b.eigenvalue = pool[g.index(pool.size())];
    b.offset = offset;
    offset += b.size;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

/// Q J Q^{-1} with a random well-conditioned Gaussian-integer Q.
inline MatrixQ conjugate_by_random(Gen& g, const MatrixQ& j) {
  const MatrixQ q = g.well_conditioned_q(j.rows());
  return q * j * *try_inverse(q);
}

}  // namespace bicx::testing
