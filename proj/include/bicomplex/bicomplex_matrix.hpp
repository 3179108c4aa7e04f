#pragma once

// Bicomplex matrices and column vectors A = A1 e + A2 e†.  Every algebraic
// operation acts on the two idempotent components independently: products,
// inverses, determinants and adjoints are all computed componentwise.

#include <cstddef>
#include <utility>
#include <vector>

#include "bicomplex/matrix.hpp"
#include "bicomplex/scalar.hpp"

namespace bicx {

template <Real R>
class BicomplexMatrix {
 public:
  using component_type = Matrix<R>;

  BicomplexMatrix() = default;
  BicomplexMatrix(component_type m1, component_type m2) : m1_(std::move(m1)), m2_(std::move(m2)) {
    if (m1_.rows() != m2_.rows() || m1_.cols() != m2_.cols()) {
      throw ShapeMismatch("idempotent components must have identical shape");
    }
  }
  /// Complex matrix embedded with m1 == m2.
  explicit BicomplexMatrix(const component_type& m) : m1_(m), m2_(m) {}

  BicomplexMatrix(std::size_t rows, std::size_t cols) : m1_(rows, cols), m2_(rows, cols) {}

  static BicomplexMatrix identity(std::size_t n) { return BicomplexMatrix(component_type::identity(n)); }

  static BicomplexMatrix diagonal(std::span<const Bicomplex<R>> d) {
    BicomplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
  }

  std::size_t rows() const { return m1_.rows(); }
  std::size_t cols() const { return m1_.cols(); }
  bool is_square() const { return m1_.is_square(); }

  const component_type& m1() const { return m1_; }
  const component_type& m2() const { return m2_; }
  const component_type& component(int k) const { return k == 1 ? m1_ : m2_; }

  Bicomplex<R> at(std::size_t i, std::size_t j) const { return Bicomplex<R>::from_idempotent(m1_(i, j), m2_(i, j)); }
  void set(std::size_t i, std::size_t j, const Bicomplex<R>& z) {
    m1_(i, j) = z.c1();
    m2_(i, j) = z.c2();
  }

  BicomplexMatrix adjoint() const { return {m1_.adjoint(), m2_.adjoint()}; }

  friend BicomplexMatrix operator+(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    return {a.m1_ + b.m1_, a.m2_ + b.m2_};
  }
  friend BicomplexMatrix operator-(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    return {a.m1_ - b.m1_, a.m2_ - b.m2_};
  }
  friend BicomplexMatrix operator*(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions disagree in bicomplex matrix product");
    return {a.m1_ * b.m1_, a.m2_ * b.m2_};
  }
  friend BicomplexMatrix operator*(const Bicomplex<R>& s, const BicomplexMatrix& a) {
    return {a.m1_ * s.c1(), a.m2_ * s.c2()};
  }
  friend bool operator==(const BicomplexMatrix& a, const BicomplexMatrix& b) {
    return a.m1_ == b.m1_ && a.m2_ == b.m2_;
  }

 private:
  component_type m1_;
  component_type m2_;
};

using BicomplexMatrixQ = BicomplexMatrix<Rational>;
using BicomplexMatrixD = BicomplexMatrix<double>;

inline BicomplexMatrixD to_double(const BicomplexMatrixQ& m) { return {to_double(m.m1()), to_double(m.m2())}; }
inline BicomplexMatrixD to_double(const BicomplexMatrixD& m) { return m; }
inline BicomplexMatrixQ to_rational(const BicomplexMatrixD& m) { return {to_rational(m.m1()), to_rational(m.m2())}; }
inline BicomplexMatrixQ to_rational(const BicomplexMatrixQ& m) { return m; }

/// Column vector v = v1 e + v2 e†.
template <Real R>
struct BicomplexVector {
  ComplexVector<R> v1;
  ComplexVector<R> v2;

  BicomplexVector() = default;
  explicit BicomplexVector(std::size_t n) : v1(n), v2(n) {}
  BicomplexVector(ComplexVector<R> a, ComplexVector<R> b) : v1(std::move(a)), v2(std::move(b)) {
    if (v1.size() != v2.size()) throw ShapeMismatch("idempotent vector components must have equal length");
  }

  static BicomplexVector basis(std::size_t n, std::size_t k) {
    BicomplexVector v(n);
    v.v1[k] = Complex<R>(1);
    v.v2[k] = Complex<R>(1);
    return v;
  }

  std::size_t size() const { return v1.size(); }
  const ComplexVector<R>& component(int k) const { return k == 1 ? v1 : v2; }

  Bicomplex<R> at(std::size_t i) const { return Bicomplex<R>::from_idempotent(v1[i], v2[i]); }
  void set(std::size_t i, const Bicomplex<R>& z) {
    v1[i] = z.c1();
    v2[i] = z.c2();
  }

  friend bool operator==(const BicomplexVector& a, const BicomplexVector& b) { return a.v1 == b.v1 && a.v2 == b.v2; }
};

using BicomplexVectorQ = BicomplexVector<Rational>;
using BicomplexVectorD = BicomplexVector<double>;

/// A·B = A1 B1 e + A2 B2 e†.
template <Real R>
BicomplexMatrix<R> mat_mul(const BicomplexMatrix<R>& a, const BicomplexMatrix<R>& b) {
  return a * b;
}

template <Real R>
BicomplexVector<R> apply(const BicomplexMatrix<R>& a, const BicomplexVector<R>& v) {
  if (a.cols() != v.size()) throw ShapeMismatch("operator and vector dimensions disagree");
  return {a.m1() * v.v1, a.m2() * v.v2};
}

template <Real R>
BicomplexMatrix<R> adjoint(const BicomplexMatrix<R>& a) {
  return a.adjoint();
}

/// det A = det A1 e + det A2 e†.
template <Real R>
Bicomplex<R> determinant(const BicomplexMatrix<R>& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  return Bicomplex<R>::from_idempotent(determinant(a.m1()), determinant(a.m2()));
}

/// A^{-1} = A1^{-1} e + A2^{-1} e†; exists exactly when both component
/// determinants are nonzero.  `rel_tol` only affects the floating backend.
template <Real R>
BicomplexMatrix<R> inverse(const BicomplexMatrix<R>& a, double rel_tol = 1e-10) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  std::optional<Matrix<R>> i1, i2;
  if constexpr (is_exact_v<R>) {
    (void)rel_tol;
    i1 = try_inverse(a.m1());
    i2 = try_inverse(a.m2());
  } else {
    i1 = try_inverse(a.m1(), rel_tol);
    i2 = try_inverse(a.m2(), rel_tol);
  }
  if (!i1 || !i2) throw SingularComponent(component_from_flags(!i1, !i2));
  return {std::move(*i1), std::move(*i2)};
}

/// λ is an eigenvalue iff det(A - λI) == 0 as a bicomplex scalar, i.e. both
/// components vanish (eigenvectors must have both components nonzero).
template <Real R>
bool is_eigenvalue(const BicomplexMatrix<R>& a, const Bicomplex<R>& lambda, double rel_tol = 1e-10) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  const auto shifted = a - lambda * BicomplexMatrix<R>::identity(a.rows());
  const auto det = determinant(shifted);
  return determinant_vanishes(shifted.m1(), det.c1(), rel_tol) &&
         determinant_vanishes(shifted.m2(), det.c2(), rel_tol);
}

/// <x, y> = Σ x_i conj(y_i) = <x1, y1> e + <x2, y2> e†.
template <Real R>
Bicomplex<R> inner_product(const BicomplexVector<R>& x, const BicomplexVector<R>& y) {
  if (x.size() != y.size()) throw ShapeMismatch("vector lengths differ in inner product");
  return Bicomplex<R>::from_idempotent(dot(x.v1, y.v1), dot(x.v2, y.v2));
}

/// ||x||_h = ||x1|| e + ||x2|| e†; squared on the exact backend.
template <Real R>
HyperbolicValue<R> vector_hyperbolic_norm(const BicomplexVector<R>& x) {
  auto sq = [](const ComplexVector<R>& v) {
    R s(0);
    for (const auto& z : v) s += z.norm2();
    return s;
  };
  if constexpr (is_exact_v<R>) {
    return HyperbolicValue<R>(sq(x.v1), sq(x.v2), true);
  } else {
    return HyperbolicValue<R>(std::sqrt(sq(x.v1)), std::sqrt(sq(x.v2)), false);
  }
}

/// Componentwise Frobenius norms, used for floating residual reports.
inline HyperbolicD frobenius_norm(const BicomplexMatrixD& a) {
  return HyperbolicD(frobenius_norm(a.m1()), frobenius_norm(a.m2()));
}

}  // namespace bicx
