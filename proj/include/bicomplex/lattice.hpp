#pragma once

// Invariant-subspace lattice diagrams built from Jordan structure.
//
// For a component matrix with Jordan blocks of sizes n_1..n_k, each tuple
// (a_1..a_k) with 0 <= a_i <= n_i names the span of the first a_i chain
// vectors of every block.  Equivalently it is the range of the block matrix
// Z = diag(S^{n_i - a_i}) over the Jordan basis, S the backward shift; labels
// record these shift powers.  This family contains every Jordan-basis-aligned
// (marked) invariant subspace; when an eigenvalue carries two or more blocks
// the true lattice is infinite and the diagram shows representatives only,
// which is reported through `LatticeInfo`.
//
// The bicomplex lattice is the product of the two component lattices under
// (S1, S2) <= (T1, T2) iff S1 ⊆ T1 and S2 ⊆ T2.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bicomplex/jordan.hpp"
#include "bicomplex/subspace.hpp"

namespace bicx {

struct LatticeInfo {
  std::string family = "prefix-tuple (Jordan chain aligned) invariant subspaces";
  /// False when some eigenvalue has several blocks, so the full invariant
  /// subspace lattice is a continuum and only representatives are listed.
  bool complete = true;
  /// Number of generalized eigenspaces composed by direct sum.
  std::size_t eigenspaces = 0;
  std::vector<std::string> warnings;
};

template <class Space>
struct Lattice {
  std::vector<Space> nodes;
  std::vector<std::string> labels;
  /// Covering pairs (lower, upper) as node indices.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  LatticeInfo info;

  std::size_t size() const { return nodes.size(); }
};

struct ComponentLattice : Lattice<Subspace> {
  /// Prefix lengths a_i per node, aligned with the Jordan block order.
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> block_sizes;
};

struct BicomplexLattice : Lattice<BicomplexSubspace> {
  /// Index of each node's component nodes in the factor lattices.
  std::vector<std::pair<std::size_t, std::size_t>> factors;
};

/// Enumerates every prefix tuple in lexicographic order; covers are single
/// coordinate increments.  Every node is checked with `is_invariant` against
/// the matrix P J P^{-1} the Jordan data describes.
ComponentLattice component_lattice(const ComplexJordanData& j);

/// Cartesian product with the componentwise order; labels "[x | y]".
BicomplexLattice product_lattice(const Lattice<Subspace>& l1, const Lattice<Subspace>& l2);

/// Jordan data per component, component lattices, then their product.  Each
/// node is verified invariant under `a`.
BicomplexLattice bicomplex_lattice(const BicomplexMatrixQ& a);

/// Transitive reduction of the containment order on `nodes`, computed by
/// brute force.  Used to cross-check the cover relation.
template <class Space>
std::vector<std::pair<std::size_t, std::size_t>> containment_reduction(const std::vector<Space>& nodes) {
  const std::size_t n = nodes.size();
  auto below = [&](std::size_t i, std::size_t j) { return i != j && nodes[j].contains(nodes[i]) && !(nodes[i] == nodes[j]); };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (below(i, k) && below(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Graphviz digraph, bottom to top, nodes ranked by total dimension.
std::string to_dot(const ComponentLattice& lattice);
std::string to_dot(const BicomplexLattice& lattice);

}  // namespace bicx
