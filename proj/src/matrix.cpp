#include "bicomplex/matrix.hpp"

namespace bicx {

EchelonForm row_reduce(MatrixQ m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    const ComplexQ inv = ComplexQ(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const ComplexQ f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const MatrixQ& m) { return row_reduce(m).pivots.size(); }

std::vector<ComplexVector<Rational>> kernel_basis(const MatrixQ& m) {
  const auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<ComplexVector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ComplexVector<Rational> v(m.cols());
    v[f] = ComplexQ(1);
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -rref(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<MatrixQ> try_inverse(const MatrixQ& m) {
  if (!m.is_square()) throw NotSquare(m.rows(), m.cols());
  const std::size_t n = m.rows();
  MatrixQ aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = ComplexQ(1);
  }
  const auto [rref, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  MatrixQ inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rref(i, n + j);
  return inv;
}

std::optional<MatrixD> try_inverse(const MatrixD& m, double rel_tol) {
  if (!m.is_square()) throw NotSquare(m.rows(), m.cols());
  const std::size_t n = m.rows();
  MatrixD lu = m;
  const auto [odd, perm] = detail::lu_in_place(lu);
  ComplexD det(1.0);
  for (std::size_t i = 0; i < n; ++i) det *= lu(i, i);
  if (odd) det = -det;
  if (determinant_vanishes(m, det, rel_tol)) return std::nullopt;

  MatrixD inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L U x = P e_col.
    ComplexVector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = perm[i] == col ? ComplexD(1.0) : ComplexD(0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) x[i] -= lu(i, k) * x[k];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) x[i] -= lu(i, k) * x[k];
      x[i] /= lu(i, i);
    }
    inv.set_column(col, x);
  }
  return inv;
}

}  // namespace bicx
