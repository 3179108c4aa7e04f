#pragma once

// Bicomplex operators on finite-dimensional bicomplex Hilbert spaces
// H = C^n e + C^n e†.  Every statement about compact operators is checked on
// explicit truncations: finite-rank operators, hyperbolic operator norms,
// spectra with their point spectrum, Riesz witnesses and best finite-rank
// approximations.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicomplex/bicomplex_matrix.hpp"
#include "bicomplex/spectral.hpp"

namespace bicx {

struct BicomplexHilbertSpace {
  std::size_t dim = 0;  // per component
};

/// K(f) = Σ σ_i <f, g_i> h_i with hyperbolic σ_i >= 0 and orthogonal
/// families g_i, h_i.  When `hs` is empty the output family is `gs`, which
/// gives the symmetric form Σ σ_i <f, g_i> g_i.
struct FiniteRankOperator {
  BicomplexHilbertSpace ambient;
  std::vector<HyperbolicD> sigmas;
  std::vector<BicomplexVectorD> gs;
  std::vector<BicomplexVectorD> hs;

  std::size_t rank() const { return sigmas.size(); }
  const BicomplexVectorD& output_vector(std::size_t i) const { return hs.empty() ? gs[i] : hs[i]; }

  /// Shape checks plus σ >= 0 and pairwise orthogonality within `tol`.
  bool is_canonical(double tol = 1e-10) const;

  /// Σ σ_i h_i g_i^* assembled as a dense bicomplex matrix.
  BicomplexMatrixD dense() const;
};

/// Evaluates the finite sum directly.
BicomplexVectorD apply(const FiniteRankOperator& k, const BicomplexVectorD& f);

/// ||T||_h = ||T1|| e + ||T2|| e†, each the largest singular value.
HyperbolicD hyperbolic_operator_norm(const BicomplexMatrixD& t, const JacobiOptions& options = {});
double operator_norm(const MatrixD& t, const JacobiOptions& options = {});

// ---------------------------------------------------------------------------
// Spectrum

template <Real R>
struct PointSpectrumEntry {
  Bicomplex<R> eigenvalue;
  BicomplexVector<R> eigenvector;  // both components nonzero
  bool invertible = false;
};

/// σ(T) is infinite whenever a component spectrum is nonempty (λI - T is
/// singular as soon as one component is), so it is held through the two
/// component spectra and a membership predicate.  The point spectrum, which
/// needs both components to be eigenvalues, is finite and listed.
template <Real R>
struct OperatorSpectrum {
  std::vector<Complex<R>> spectrum1;
  std::vector<Complex<R>> spectrum2;
  std::vector<PointSpectrumEntry<R>> point_spectrum;
  double tol = 0.0;  // membership tolerance, floating backend only

  /// λI - T not invertible: λ1 ∈ σ(T1) or λ2 ∈ σ(T2).
  bool contains(const Bicomplex<R>& lambda) const;
  /// λ1 ∈ σ(T1) and λ2 ∈ σ(T2).
  bool is_eigenvalue(const Bicomplex<R>& lambda) const;
  /// Point-spectrum members that are invertible scalars.
  std::size_t invertible_members() const;
};

using OperatorSpectrumQ = OperatorSpectrum<Rational>;
using OperatorSpectrumD = OperatorSpectrum<double>;

/// Exact path: Gaussian-rational eigenvalues from the characteristic
/// polynomial, eigenvectors from exact kernels.
OperatorSpectrumQ spectrum(const BicomplexMatrixQ& t);

/// Floating path: self-adjoint operators use the Jacobi eigensolver;
/// anything else is converted exactly to dyadic rationals and sent through
/// the exact path (so its spectrum must lie in Q(i)).
OperatorSpectrumD spectrum(const BicomplexMatrixD& t, double tol = 1e-9, const JacobiOptions& options = {});

// ---------------------------------------------------------------------------
// Compact-operator tower checks

/// σ_i = i^{-power1} e + i^{-power2} e†, or explicit values when given.
struct SigmaSequence {
  double power1 = 1.0;
  double power2 = 1.0;
  std::vector<HyperbolicD> explicit_values;

  HyperbolicD at(std::size_t i) const;  // 1-based
};

/// The diagonal finite-rank operator Σ σ_i <f, ê_i> ê_i on dimension n.
FiniteRankOperator diagonal_tower_operator(const SigmaSequence& sigma, std::size_t n);

struct ComponentTowerReport {
  std::size_t dim = 0;
  /// Eigenvalues sorted by decreasing modulus.
  std::vector<double> eigenvalues;
  /// Eigenvalues with |λ| >= ε, i.e. outside the open ball of radius ε at 0.
  std::size_t outside_count = 0;
  double min_modulus = 0.0;
};

/// Per-component data: the same function serves the bicomplex report and
/// an independent per-component computation.
ComponentTowerReport component_tower_report(const MatrixD& k, double epsilon, const JacobiOptions& options = {});

struct TruncationReport {
  std::size_t dim = 0;
  std::array<ComponentTowerReport, 2> components;
  std::size_t point_spectrum_size = 0;
  std::size_t invertible_members = 0;
  /// Invertible point-spectrum members with det(λI - K) = 0 in both
  /// components and an eigenvector residual within tolerance.
  std::size_t certified_eigenvalues = 0;
  bool all_invertible_certified = false;
  /// Pairings outside every hyperbolic ε-ball centred on a noninvertible
  /// value: |λ1| >= ε1 and |λ2| >= ε2.
  std::size_t pairings_outside = 0;
  /// Diagonal eigenvalues σ_i with both components strictly above ε.
  std::size_t diagonal_above = 0;
  /// Invertible λ = λ1 e + μ e† with λ1 ∈ σ(K1), μ ∉ σ(K2) sampled from the
  /// spectrum: members of σ(K) that admit only a one-component eigenvector.
  std::size_t mixed_samples = 0;
  std::size_t mixed_in_spectrum = 0;
  std::size_t mixed_strict_eigenvalues = 0;
  std::size_t mixed_relaxed_witnesses = 0;
};

struct TowerReport {
  HyperbolicD epsilon;
  std::vector<TruncationReport> truncations;
  /// 0 is adjoined as the limit point forced in infinite dimension.
  std::string limit_witness = "0";
  /// Smallest modulus per component decreases along the tower.
  bool moduli_decrease = false;
};

TowerReport check_compact_spectral_properties(const SigmaSequence& sigma, const std::vector<std::size_t>& dims,
                                              const HyperbolicD& epsilon, const JacobiOptions& options = {});

/// Tower report for an arbitrary self-adjoint operator family (used for the
/// zero operator and for custom truncations).
TruncationReport truncation_report(const BicomplexMatrixD& k, const HyperbolicD& epsilon,
                                   const std::vector<HyperbolicD>& diagonal, const JacobiOptions& options = {});

// ---------------------------------------------------------------------------
// Riesz witness

/// y with ||y||_h = 1 and dist_h(y, X) = (r, r), X = span(basis) taken
/// componentwise.  Per component y_i = r u_i + sqrt(1 - r^2) w_i with u_i a
/// unit vector orthogonal to X_i and w_i a unit vector in X_i.
BicomplexVectorD riesz_witness(const std::vector<BicomplexVectorD>& basis, std::size_t dim, double r);

/// Orthonormal basis of span(vectors) by modified Gram-Schmidt with one
/// reorthogonalization pass; vectors below `drop_tol` relative norm are
/// discarded.
std::vector<ComplexVector<double>> orthonormalize(const std::vector<ComplexVector<double>>& vectors,
                                                  double drop_tol = 1e-12);

// ---------------------------------------------------------------------------
// Finite-rank approximation

struct SingularTriples {
  std::vector<double> values;  // descending
  std::vector<ComplexVector<double>> right;
  std::vector<ComplexVector<double>> left;
};

/// Right vectors from the eigenvectors of T*T; left vectors u = T v / σ,
/// completed from the eigenvectors of T T* where σ vanishes.
SingularTriples singular_triples(const MatrixD& t, const JacobiOptions& options = {});

/// Best rank-r approximation per component, assembled as
/// K_r(f) = Σ_{i<r} σ_i <f, g_i> h_i.
FiniteRankOperator best_rank_approximation(const BicomplexMatrixD& t, std::size_t rank,
                                           const JacobiOptions& options = {});

struct ApproximationRow {
  std::size_t rank = 0;
  HyperbolicD error;     // ||T - K_r||_h
  HyperbolicD expected;  // (r+1)-th singular value per component, 0 past n
  bool canonical = false;
};

struct ApproximationReport {
  std::vector<ApproximationRow> rows;
  HyperbolicD norm;  // ||T||_h
  bool nonincreasing = false;
};

ApproximationReport norm_limit_demo(const BicomplexMatrixD& t, const std::vector<std::size_t>& ranks,
                                    const JacobiOptions& options = {});

}  // namespace bicx
