#pragma once

// Exact Jordan canonical forms over the Gaussian rationals, and their
// assembly into a bicomplex Jordan form P J P^{-1} with P = P1 e + P2 e†,
// J = J1 e + J2 e†.
//
// Jordan structure is discontinuous in the entries, so only the exact
// backend is supported; eigenvalues must be Gaussian rationals.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bicomplex/bicomplex_matrix.hpp"
#include "bicomplex/polynomial.hpp"

namespace bicx {

struct JordanBlock {
  ComplexQ eigenvalue;
  std::size_t size = 0;
  /// Column offset of the block inside P and J.
  std::size_t offset = 0;
  /// v_1 .. v_size with (A - λI) v_1 = 0 and (A - λI) v_k = v_{k-1}.
  std::vector<ComplexVector<Rational>> chain;
};

struct ComplexJordanData {
  /// Distinct eigenvalues, sorted lexicographically by (re, im).
  std::vector<ComplexQ> eigenvalues;
  /// Blocks in output order: grouped by eigenvalue, sizes descending.
  std::vector<JordanBlock> blocks;
  MatrixQ transition;  // P
  MatrixQ jordan;      // J

  /// Block-size multiset (descending) for eigenvalue `k`.
  std::vector<std::size_t> block_sizes(std::size_t k) const;
  /// Indices into `blocks` belonging to eigenvalue `k`.
  std::vector<std::size_t> blocks_of(std::size_t k) const;
  std::size_t dimension() const { return jordan.rows(); }
  bool is_diagonal() const;
};

/// Superdiagonal entry of a bicomplex Jordan matrix: each component
/// contributes a 0 or a 1, giving 0, 1, e or e†.
enum class SuperdiagonalSymbol { zero, one, e, e_dagger };

std::string to_string(SuperdiagonalSymbol s);

struct BicomplexJordanData {
  ComplexJordanData comp1;
  ComplexJordanData comp2;
  BicomplexMatrixQ p;
  BicomplexMatrixQ j;

  /// Symbols that actually occur on the superdiagonal of j.
  std::set<SuperdiagonalSymbol> superdiagonal_alphabet() const;
};

/// Builds J from a block list (eigenvalue on the diagonal, 1 above it inside
/// each block).
MatrixQ jordan_matrix(const std::vector<JordanBlock>& blocks, std::size_t n);

/// Classical construction from kernels of (A - λI)^k.  Verifies A P == P J
/// before returning.  Throws DoesNotSplit if the spectrum leaves Q(i).
ComplexJordanData complex_jordan(const MatrixQ& a);

/// Per-component Jordan data assembled into p, j with p j p^{-1} == a
/// checked exactly.  Component failures are rethrown tagged with the
/// component index.
BicomplexJordanData bicomplex_jordan(const BicomplexMatrixQ& a);

/// Reorders the blocks of a Jordan decomposition; `order` is a permutation
/// of block indices.  The result is another valid Jordan decomposition.
ComplexJordanData permute_blocks(const ComplexJordanData& data, const std::vector<std::size_t>& order);

/// Every distinct bicomplex Jordan form reachable by reordering the blocks
/// of either component (distinct as sequences of (eigenvalue, size) pairs),
/// capped at `limit` results.  The first entry is the canonical ordering.
std::vector<BicomplexJordanData> enumerate_block_orders(const BicomplexJordanData& data, std::size_t limit = 1024);

}  // namespace bicx
