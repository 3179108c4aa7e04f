#pragma once

// The bicomplex eigenvalue set: every pairing λ1 e + λ2 e† of an eigenvalue
// of the e-component with one of the e†-component.  Eigenvectors need both
// idempotent components nonzero, so one-sided pairings are not included.

#include <vector>

#include "bicomplex/bicomplex_matrix.hpp"
#include "bicomplex/spectral.hpp"

namespace bicx {

/// Distinct pairings ordered by (λ1, λ2), each component list sorted
/// lexicographically.  Throws EigenvalueFieldError when a component's
/// characteristic polynomial does not split over Q(i).
std::vector<BicomplexQ> eigenvalues(const BicomplexMatrixQ& a);

/// Self-adjoint input goes through the Jacobi solver (eigenvalues closer
/// than `tol` relative are merged); anything else is read exactly as dyadic
/// rationals and handled by the exact path.
std::vector<BicomplexD> eigenvalues(const BicomplexMatrixD& a, double tol = 1e-9, const JacobiOptions& options = {});

}  // namespace bicx
