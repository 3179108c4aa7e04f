#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bicomplex/bicomplex_matrix.hpp"

namespace bicx {

/// Exact subspace of Q(i)^n held by its reduced row echelon basis, so
/// equality and containment are structural.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::span<const ComplexVector<Rational>> vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ComplexVector<Rational>>& basis() const { return basis_; }

  /// Adds v if it is not already in the span; returns whether the span grew.
  bool extend(ComplexVector<Rational> v);

  bool contains(const ComplexVector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  /// v minus its components along the basis pivots.
  ComplexVector<Rational> reduce(ComplexVector<Rational> v) const;

  std::size_t ambient_;
  std::vector<ComplexVector<Rational>> basis_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// S = S1 e ⊕ S2 e†.
struct BicomplexSubspace {
  Subspace s1;
  Subspace s2;

  std::size_t ambient() const { return s1.ambient(); }
  bool contains(const BicomplexSubspace& o) const { return s1.contains(o.s1) && s2.contains(o.s2); }
  friend bool operator==(const BicomplexSubspace& a, const BicomplexSubspace& b) {
    return a.s1 == b.s1 && a.s2 == b.s2;
  }
};

/// A S ⊆ S, via rank([basis | A basis]) == rank(basis).
bool is_invariant(const MatrixQ& a, const Subspace& s);

/// A S ⊆ S componentwise: A1 S1 ⊆ S1 and A2 S2 ⊆ S2.
bool is_invariant(const BicomplexMatrixQ& a, const BicomplexSubspace& s);

}  // namespace bicx
