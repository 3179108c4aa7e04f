#pragma once

// Complex matrices over a coefficient field, plus the few dense kernels the
// rest of the library needs: Bareiss / LU determinants, Gauss-Jordan
// inverse, and exact reduced row echelon form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bicomplex/complex.hpp"
#include "bicomplex/errors.hpp"

namespace bicx {

template <Real R>
using ComplexVector = std::vector<Complex<R>>;

template <Real R>
class Matrix {
 public:
  using value_type = Complex<R>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ShapeMismatch("entry count does not match rows*cols");
  }
  Matrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeMismatch("ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value_type(1);
    return m;
  }

  static Matrix diagonal(std::span<const value_type> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_columns(std::span<const ComplexVector<R>> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<value_type>& entries() const { return data_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexVector<R> column(std::size_t j) const {
    ComplexVector<R> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_column(std::size_t j, std::span<const value_type> v) {
    if (v.size() != rows_) throw ShapeMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const value_type& z) { return z.is_zero(); });
  }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const value_type& s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const value_type& s) { return a *= s; }
  friend Matrix operator*(const value_type& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("inner dimensions disagree in matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend ComplexVector<R> operator*(const Matrix& a, const ComplexVector<R>& v) {
    if (a.cols_ != v.size()) throw ShapeMismatch("matrix-vector dimensions disagree");
    ComplexVector<R> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixD = Matrix<double>;

template <Real R>
Matrix<R> scalar_identity(std::size_t n, const Complex<R>& lambda) {
  return Matrix<R>::identity(n) * lambda;
}

inline MatrixD to_double(const MatrixQ& m) {
  std::vector<ComplexD> e;
  e.reserve(m.entries().size());
  for (const auto& z : m.entries()) e.push_back(to_double(z));
  return MatrixD(m.rows(), m.cols(), std::move(e));
}
inline MatrixD to_double(const MatrixD& m) { return m; }

inline MatrixQ to_rational(const MatrixD& m) {
  std::vector<ComplexQ> e;
  e.reserve(m.entries().size());
  for (const auto& z : m.entries()) e.push_back(to_rational(z));
  return MatrixQ(m.rows(), m.cols(), std::move(e));
}
inline MatrixQ to_rational(const MatrixQ& m) { return m; }

inline double frobenius_norm(const MatrixD& m) {
  double s = 0;
  for (const auto& z : m.entries()) s += z.norm2();
  return std::sqrt(s);
}

inline double frobenius_norm(const MatrixQ& m) { return frobenius_norm(to_double(m)); }

inline double norm2(const ComplexVector<double>& v) {
  double s = 0;
  for (const auto& z : v) s += z.norm2();
  return std::sqrt(s);
}

template <Real R>
Complex<R> dot(const ComplexVector<R>& x, const ComplexVector<R>& y) {
  if (x.size() != y.size()) throw ShapeMismatch("vector lengths differ in inner product");
  Complex<R> s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i].conj();
  return s;
}

template <Real R>
bool is_zero_vector(const ComplexVector<R>& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex<R>& z) { return z.is_zero(); });
}

// ---------------------------------------------------------------------------
// Determinant

namespace detail {

inline ComplexQ bareiss_determinant(MatrixQ m) {
  const std::size_t n = m.rows();
  if (n == 0) return ComplexQ(1);
  bool negate = false;
  ComplexQ prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return ComplexQ(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = ComplexQ(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// In-place LU with partial pivoting.  Returns the permutation parity and
/// pivot order; the factors overwrite `m`.
inline std::pair<bool, std::vector<std::size_t>> lu_in_place(MatrixD& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  bool odd = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = m(k, k).norm2();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).norm2() > best) {
        best = m(i, k).norm2();
        piv = i;
      }
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(perm[k], perm[piv]);
      odd = !odd;
    }
    if (best == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      const ComplexD f = m(i, k) / m(k, k);
      m(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return {odd, perm};
}

inline ComplexD lu_determinant(MatrixD m) {
  const auto [odd, perm] = lu_in_place(m);
  ComplexD det(1.0);
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return odd ? -det : det;
}

}  // namespace detail

/// Exact backend: Bareiss fraction-free elimination.  Floating backend: LU
/// with partial pivoting.
template <Real R>
Complex<R> determinant(const Matrix<R>& m) {
  if (!m.is_square()) throw NotSquare(m.rows(), m.cols());
  if constexpr (is_exact_v<R>) {
    return detail::bareiss_determinant(m);
  } else {
    return detail::lu_determinant(m);
  }
}

/// Zero test for a determinant value.  Exact: structural.  Floating:
/// |det| <= rel_tol * max(||M||_F, 1)^n, scaled like the determinant itself.
template <Real R>
bool determinant_vanishes(const Matrix<R>& m, const Complex<R>& det, double rel_tol) {
  if constexpr (is_exact_v<R>) {
    (void)m;
    (void)rel_tol;
    return det.is_zero();
  } else {
    const double scale = std::pow(std::max(frobenius_norm(m), 1.0), static_cast<double>(m.rows()));
    return abs(det) <= rel_tol * scale;
  }
}

// ---------------------------------------------------------------------------
// Exact row reduction

/// Reduced row echelon form together with the pivot column of each nonzero
/// row.  Pivots are taken leftmost-first, topmost-first.
struct EchelonForm {
  MatrixQ rref;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(MatrixQ m);

std::size_t rank(const MatrixQ& m);

/// Basis of the null space, one vector per free column in increasing order,
/// with a 1 in that free position.
std::vector<ComplexVector<Rational>> kernel_basis(const MatrixQ& m);

/// Inverse, or nullopt when singular.  Exact: Gauss-Jordan.  Floating: LU
/// solve; singularity judged by `determinant_vanishes` with `rel_tol`.
std::optional<MatrixQ> try_inverse(const MatrixQ& m);
std::optional<MatrixD> try_inverse(const MatrixD& m, double rel_tol = 1e-10);

}  // namespace bicx
