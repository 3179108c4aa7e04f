#include "bicomplex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bicx {

bool is_self_adjoint(const MatrixD& a, double tol) {
  if (!a.is_square()) return false;
  const double scale = frobenius_norm(a);
  return frobenius_norm(a - a.adjoint()) <= tol * scale;
}

bool is_self_adjoint(const BicomplexMatrixD& a, double tol) {
  return is_self_adjoint(a.m1(), tol) && is_self_adjoint(a.m2(), tol);
}

namespace {

double off_diagonal_mass(const MatrixD& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j).norm2();
  return std::sqrt(s);
}

// A <- G^H A G and V <- V G for the unitary G acting on coordinates (p, q).
void rotate(MatrixD& a, MatrixD& v, std::size_t p, std::size_t q) {
  const ComplexD apq = a(p, q);
  const double r = abs(apq);
  const ComplexD phase(apq.re / r, -apq.im / r);  // e^{-i arg apq}
  const double theta = (a(q, q).re - a(p, p).re) / (2.0 * r);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const ComplexD gpp(c), gpq(s);
  const ComplexD gqp = ComplexD(-s) * phase;
  const ComplexD gqq = ComplexD(c) * phase;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const ComplexD akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
    const ComplexD vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexD apk = a(p, k), aqk = a(q, k);
    a(p, k) = gpp.conj() * apk + gqp.conj() * aqk;
    a(q, k) = gpq.conj() * apk + gqq.conj() * aqk;
  }
  a(p, q) = ComplexD();
  a(q, p) = ComplexD();
  a(p, p).im = 0.0;
  a(q, q).im = 0.0;
}

void normalize_phases(MatrixD& v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.rows(); ++i)
      if (v(i, j).norm2() > v(best, j).norm2() * (1.0 + 1e-12)) best = i;
    const double r = abs(v(best, j));
    if (r == 0.0) continue;
    const ComplexD phase(v(best, j).re / r, -v(best, j).im / r);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= phase;
    v(best, j).im = 0.0;
  }
}

void validate_pairing(std::vector<std::size_t>& pairing, std::size_t n) {
  if (pairing.empty()) {
    pairing.resize(n);
    std::iota(pairing.begin(), pairing.end(), std::size_t{0});
    return;
  }
  if (pairing.size() != n) throw InvalidArgument("pairing has the wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t k : pairing) {
    if (k >= n || seen[k]) throw InvalidArgument("pairing is not a permutation");
    seen[k] = true;
  }
}

double relative(double value, double scale) { return scale > 0 ? value / scale : value; }

}  // namespace

HermitianEigenData hermitian_eigen(const MatrixD& input, const JacobiOptions& options) {
  if (!input.is_square()) throw NotSquare(input.rows(), input.cols());
  if (!is_self_adjoint(input, options.selfadjoint_tol)) {
    throw NotSelfAdjoint("matrix is not Hermitian within tolerance " + std::to_string(options.selfadjoint_tol));
  }
  const std::size_t n = input.rows();
  MatrixD a = (input + input.adjoint()) * ComplexD(0.5);
  MatrixD v = MatrixD::identity(n);
  const double scale = frobenius_norm(a);

  HermitianEigenData out;
  double off = off_diagonal_mass(a);
  while (off > options.convergence_tol * scale) {
    if (out.sweeps >= options.max_sweeps) throw NoConvergence(out.sweeps);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q).norm2() > 0.0) rotate(a, v, p, q);
    ++out.sweeps;
    const double next = off_diagonal_mass(a);
    // Rounding floor: a sweep that no longer shrinks a tiny residue is done.
    if (next >= 0.5 * off && next <= 1e-12 * scale) break;
    off = next;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).re < a(y, y).re; });
  out.values.resize(n);
  out.vectors = MatrixD(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).re;
    out.vectors.set_column(k, v.column(order[k]));
  }
  normalize_phases(out.vectors);
  return out;
}

SpectralResiduals spectral_residuals(const BicomplexMatrixD& a, const BicomplexMatrixD& p, const BicomplexMatrixD& d) {
  SpectralResiduals r;
  const auto id = BicomplexMatrixD::identity(a.rows());
  const auto unit = p.adjoint() * p - id;
  const auto rec = a - p * d * p.adjoint();
  r.unitarity = frobenius_norm(unit);
  const auto an = frobenius_norm(a);
  const auto rn = frobenius_norm(rec);
  r.reconstruction = HyperbolicD(relative(rn.h1, an.h1), relative(rn.h2, an.h2));
  double im1 = 0, im2 = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    im1 = std::max(im1, std::fabs(d.m1()(i, i).im));
    im2 = std::max(im2, std::fabs(d.m2()(i, i).im));
  }
  r.imaginary = HyperbolicD(im1, im2);
  return r;
}

namespace {

BicomplexSpectralData assemble(const BicomplexMatrixD& a, const HermitianEigenData& e1, const HermitianEigenData& e2,
                               std::vector<std::size_t> pairing) {
  const std::size_t n = a.rows();
  MatrixD p2(n, n), d1(n, n), d2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    p2.set_column(i, e2.vectors.column(pairing[i]));
    d1(i, i) = ComplexD(e1.values[i]);
    d2(i, i) = ComplexD(e2.values[pairing[i]]);
  }
  BicomplexSpectralData out;
  out.p = BicomplexMatrixD(e1.vectors, p2);
  out.d = BicomplexMatrixD(d1, d2);
  out.pairing = std::move(pairing);
  out.residuals = spectral_residuals(a, out.p, out.d);
  return out;
}

std::pair<HermitianEigenData, HermitianEigenData> component_eigen(const BicomplexMatrixD& a,
                                                                  const JacobiOptions& options) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  if (!is_self_adjoint(a, options.selfadjoint_tol)) {
    throw NotSelfAdjoint("bicomplex matrix is not self-adjoint within tolerance " +
                         std::to_string(options.selfadjoint_tol));
  }
  return {hermitian_eigen(a.m1(), options), hermitian_eigen(a.m2(), options)};
}

}  // namespace

BicomplexSpectralData selfadjoint_diagonalize(const BicomplexMatrixD& a, std::vector<std::size_t> pairing,
                                              const JacobiOptions& options) {
  const auto [e1, e2] = component_eigen(a, options);
  validate_pairing(pairing, a.rows());
  return assemble(a, e1, e2, std::move(pairing));
}

std::vector<BicomplexSpectralData> enumerate_diagonalizations(const BicomplexMatrixD& a, double separation_tol,
                                                              const JacobiOptions& options) {
  const auto [e1, e2] = component_eigen(a, options);
  for (const auto* e : {&e1, &e2}) {
    double radius = 0;
    for (double x : e->values) radius = std::max(radius, std::fabs(x));
    const double gap = separation_tol * std::max(radius, 1e-300);
    for (std::size_t k = 1; k < e->values.size(); ++k) {
      if (e->values[k] - e->values[k - 1] <= gap) {
        throw DegenerateSpectrum("component " + std::string(e == &e1 ? "1" : "2") +
                                 " has eigenvalues closer than the separation tolerance");
      }
    }
  }
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<BicomplexSpectralData> out;
  do {
    out.push_back(assemble(a, e1, e2, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace bicx
