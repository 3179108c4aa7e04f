#pragma once

// End-to-end reproductions of the two worked examples, each returning a JSON
// report with one entry per check and an overall "pass".

#include "json_io.hpp"
#include "bicomplex/spectral.hpp"

namespace bicx::examples {

struct Example1Options {
  double det_tol = 1e-10;       // relative zero test for det(A - λI)
  double residual_tol = 1e-9;   // reconstruction residual bound
  JacobiOptions jacobi;
};

/// A = [[0, z], [conj z, 0]] for an invertible z.
BicomplexMatrixD example1_matrix(const BicomplexD& z);

/// Both stated eigenvalue pairs, both stated diagonalizations and the
/// spectral-theorem enumeration.
io::json example1(const BicomplexD& z, const Example1Options& options = {});

/// The default noncomplex input (3+4i) + j(1-2i).
BicomplexD example1_default_z();

/// A = 0 e + [[0, 1], [0, 0]] e†: Jordan data, product lattice and checks.
BicomplexMatrixQ example2_matrix();
io::json example2();

}  // namespace bicx::examples
