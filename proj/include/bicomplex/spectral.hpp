#pragma once

// Unitary diagonalization of self-adjoint bicomplex matrices on the floating
// backend.  Each idempotent component is diagonalized by a cyclic complex
// Jacobi eigensolver; the bicomplex factors are assembled componentwise and
// the two component spectra may be matched by any permutation.

#include <cstddef>
#include <vector>

#include "bicomplex/bicomplex_matrix.hpp"

namespace bicx {

struct JacobiOptions {
  /// ||A - A*||_F <= selfadjoint_tol * ||A||_F is accepted as Hermitian.
  double selfadjoint_tol = 1e-10;
  /// Sweeps stop once the off-diagonal Frobenius mass falls below
  /// convergence_tol * ||A||_F.
  double convergence_tol = 1e-14;
  int max_sweeps = 100;
};

struct HermitianEigenData {
  std::vector<double> values;  // ascending
  MatrixD vectors;             // unitary, eigenvectors as columns
  int sweeps = 0;
};

/// Eigenvector phases are fixed so the largest-modulus entry of each column
/// (first one on ties) is real and positive.
HermitianEigenData hermitian_eigen(const MatrixD& a, const JacobiOptions& options = {});

struct SpectralResiduals {
  /// ||P* P - I||_F per component.
  HyperbolicD unitarity;
  /// ||A - P D P*||_F / max(||A||_F, 1) per component.
  HyperbolicD reconstruction;
  /// Largest |Im d_ii| per component.
  HyperbolicD imaginary;
};

struct BicomplexSpectralData {
  BicomplexMatrixD p;
  BicomplexMatrixD d;
  /// Position i of the diagonal pairs component-1 eigenvalue i with
  /// component-2 eigenvalue pairing[i] (both in ascending order).
  std::vector<std::size_t> pairing;
  SpectralResiduals residuals;
};

/// p = (P1, P2 Π), d = (D1, Π^{-1} D2 Π).  An empty `pairing` means identity.
BicomplexSpectralData selfadjoint_diagonalize(const BicomplexMatrixD& a, std::vector<std::size_t> pairing = {},
                                              const JacobiOptions& options = {});

/// All n! pairings.  Requires simple component spectra: adjacent
/// eigenvalues must differ by more than separation_tol * spectral radius.
std::vector<BicomplexSpectralData> enumerate_diagonalizations(const BicomplexMatrixD& a,
                                                              double separation_tol = 1e-8,
                                                              const JacobiOptions& options = {});

SpectralResiduals spectral_residuals(const BicomplexMatrixD& a, const BicomplexMatrixD& p, const BicomplexMatrixD& d);

/// ||A - A*||_F <= tol * ||A||_F in both components.
bool is_self_adjoint(const BicomplexMatrixD& a, double tol = 1e-10);
bool is_self_adjoint(const MatrixD& a, double tol = 1e-10);

}  // namespace bicx
