#include "bicomplex/subspace.hpp"

#include <algorithm>

namespace bicx {

Subspace Subspace::span(std::span<const ComplexVector<Rational>> vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.extend(v);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t k = 0; k < ambient; ++k) {
    ComplexVector<Rational> v(ambient);
    v[k] = ComplexQ(1);
    s.extend(std::move(v));
  }
  return s;
}

ComplexVector<Rational> Subspace::reduce(ComplexVector<Rational> v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const ComplexQ f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) v[k] -= f * basis_[r][k];
  }
  return v;
}

bool Subspace::extend(ComplexVector<Rational> v) {
  if (v.size() != ambient_) throw ShapeMismatch("vector length differs from subspace ambient dimension");
  v = reduce(std::move(v));
  const auto nz = std::find_if(v.begin(), v.end(), [](const ComplexQ& z) { return !z.is_zero(); });
  if (nz == v.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
  const ComplexQ inv = ComplexQ(1) / v[pivot];
  for (auto& z : v) z *= inv;
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (auto& row : basis_) {
    const ComplexQ f = row[pivot];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) row[k] -= f * v[k];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const ComplexVector<Rational>& v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector length differs from subspace ambient dimension");
  return is_zero_vector(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeMismatch("subspaces live in different ambient spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& v) { return contains(v); });
}

bool is_invariant(const MatrixQ& a, const Subspace& s) {
  if (!a.is_square() || a.rows() != s.ambient()) throw ShapeMismatch("matrix and subspace dimensions disagree");
  const std::size_t d = s.dim();
  if (d == 0) return true;
  MatrixQ stacked(s.ambient(), 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    stacked.set_column(k, s.basis()[k]);
    stacked.set_column(d + k, a * s.basis()[k]);
  }
  return rank(stacked) == d;
}

bool is_invariant(const BicomplexMatrixQ& a, const BicomplexSubspace& s) {
  if (s.s1.ambient() != s.s2.ambient()) throw ShapeMismatch("bicomplex subspace components differ in ambient size");
  return is_invariant(a.m1(), s.s1) && is_invariant(a.m2(), s.s2);
}

}  // namespace bicx
