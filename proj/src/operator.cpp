#include "bicomplex/operator.hpp"

#include <algorithm>
#include <cmath>

#include "bicomplex/polynomial.hpp"

namespace bicx {

namespace {

const ComplexVector<double>& part(const BicomplexVectorD& v, int c) { return c == 1 ? v.v1 : v.v2; }
double part(const HyperbolicD& h, int c) { return c == 1 ? h.h1 : h.h2; }

bool orthogonal_family(const std::vector<BicomplexVectorD>& family, double tol) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (int c = 1; c <= 2; ++c) {
        const double scale = norm2(part(family[i], c)) * norm2(part(family[j], c));
        if (abs(dot(part(family[i], c), part(family[j], c))) > tol * std::max(scale, 1e-300)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool FiniteRankOperator::is_canonical(double tol) const {
  if (gs.size() != sigmas.size()) return false;
  if (!hs.empty() && hs.size() != sigmas.size()) return false;
  for (const auto& g : gs)
    if (g.size() != ambient.dim) return false;
  for (const auto& h : hs)
    if (h.size() != ambient.dim) return false;
  for (const auto& s : sigmas)
    if (s.h1 < 0 || s.h2 < 0) return false;
  return orthogonal_family(gs, tol) && (hs.empty() || orthogonal_family(hs, tol));
}

BicomplexMatrixD FiniteRankOperator::dense() const {
  const std::size_t n = ambient.dim;
  MatrixD m[2] = {MatrixD(n, n), MatrixD(n, n)};
  for (std::size_t i = 0; i < rank(); ++i) {
    for (int c = 1; c <= 2; ++c) {
      const auto& g = part(gs[i], c);
      const auto& h = part(output_vector(i), c);
      const ComplexD s(part(sigmas[i], c));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) m[c - 1](r, k) += s * h[r] * g[k].conj();
    }
  }
  return {m[0], m[1]};
}

BicomplexVectorD apply(const FiniteRankOperator& k, const BicomplexVectorD& f) {
  if (f.size() != k.ambient.dim) throw ShapeMismatch("vector does not live in the operator's space");
  BicomplexVectorD out(k.ambient.dim);
  for (std::size_t i = 0; i < k.rank(); ++i) {
    const ComplexD c1 = ComplexD(k.sigmas[i].h1) * dot(f.v1, k.gs[i].v1);
    const ComplexD c2 = ComplexD(k.sigmas[i].h2) * dot(f.v2, k.gs[i].v2);
    const auto& h = k.output_vector(i);
    for (std::size_t r = 0; r < out.size(); ++r) {
      out.v1[r] += c1 * h.v1[r];
      out.v2[r] += c2 * h.v2[r];
    }
  }
  return out;
}

double operator_norm(const MatrixD& t, const JacobiOptions& options) {
  if (t.rows() == 0 || t.cols() == 0) return 0.0;
  const auto e = hermitian_eigen(t.adjoint() * t, options);
  return std::sqrt(std::max(e.values.back(), 0.0));
}

HyperbolicD hyperbolic_operator_norm(const BicomplexMatrixD& t, const JacobiOptions& options) {
  return HyperbolicD(operator_norm(t.m1(), options), operator_norm(t.m2(), options));
}

// ---------------------------------------------------------------------------
// Spectrum

namespace {

bool close_member(const ComplexQ& x, const ComplexQ& y, double) { return x == y; }
bool close_member(const ComplexD& x, const ComplexD& y, double tol) {
  return abs(x - y) <= tol * std::max(1.0, abs(y));
}

template <Real R>
bool in_list(const std::vector<Complex<R>>& list, const Complex<R>& x, double tol) {
  return std::any_of(list.begin(), list.end(), [&](const Complex<R>& y) { return close_member(x, y, tol); });
}

}  // namespace

template <Real R>
bool OperatorSpectrum<R>::contains(const Bicomplex<R>& lambda) const {
  return in_list(spectrum1, lambda.c1(), tol) || in_list(spectrum2, lambda.c2(), tol);
}

template <Real R>
bool OperatorSpectrum<R>::is_eigenvalue(const Bicomplex<R>& lambda) const {
  return in_list(spectrum1, lambda.c1(), tol) && in_list(spectrum2, lambda.c2(), tol);
}

template <Real R>
std::size_t OperatorSpectrum<R>::invertible_members() const {
  return static_cast<std::size_t>(
      std::count_if(point_spectrum.begin(), point_spectrum.end(), [](const auto& e) { return e.invertible; }));
}

template struct OperatorSpectrum<Rational>;
template struct OperatorSpectrum<double>;

namespace {

template <Real R>
void pair_up(OperatorSpectrum<R>& out, const std::vector<ComplexVector<R>>& vecs1,
             const std::vector<ComplexVector<R>>& vecs2) {
  for (std::size_t a = 0; a < out.spectrum1.size(); ++a) {
    for (std::size_t b = 0; b < out.spectrum2.size(); ++b) {
      PointSpectrumEntry<R> e;
      e.eigenvalue = Bicomplex<R>::from_idempotent(out.spectrum1[a], out.spectrum2[b]);
      e.eigenvector = BicomplexVector<R>(vecs1[a], vecs2[b]);
      e.invertible = e.eigenvalue.is_invertible();
      out.point_spectrum.push_back(std::move(e));
    }
  }
}

}  // namespace

OperatorSpectrumQ spectrum(const BicomplexMatrixQ& t) {
  if (!t.is_square()) throw NotSquare(t.rows(), t.cols());
  OperatorSpectrumQ out;
  std::vector<ComplexVector<Rational>> vecs[2];
  for (int c = 1; c <= 2; ++c) {
    const MatrixQ& m = t.component(c);
    std::vector<RootMultiplicity> roots;
    try {
      roots = split_eigenvalues(char_poly(m));
    } catch (const DoesNotSplit& e) {
      throw DoesNotSplit(e.remaining(), static_cast<std::size_t>(c));
    }
    auto& spec = c == 1 ? out.spectrum1 : out.spectrum2;
    for (const auto& [root, mult] : roots) {
      spec.push_back(root);
      vecs[c - 1].push_back(kernel_basis(m - scalar_identity(m.rows(), root)).front());
    }
  }
  pair_up(out, vecs[0], vecs[1]);
  return out;
}

OperatorSpectrumD spectrum(const BicomplexMatrixD& t, double tol, const JacobiOptions& options) {
  if (!t.is_square()) throw NotSquare(t.rows(), t.cols());
  OperatorSpectrumD out;
  out.tol = tol;
  std::vector<ComplexVector<double>> vecs[2];
  if (is_self_adjoint(t, options.selfadjoint_tol)) {
    for (int c = 1; c <= 2; ++c) {
      const auto e = hermitian_eigen(t.component(c), options);
      auto& spec = c == 1 ? out.spectrum1 : out.spectrum2;
      for (std::size_t k = 0; k < e.values.size(); ++k) {
        const ComplexD lambda(e.values[k]);
        if (!spec.empty() && close_member(lambda, spec.back(), tol)) continue;
        spec.push_back(lambda);
        vecs[c - 1].push_back(e.vectors.column(k));
      }
    }
  } else {
    const auto exact = spectrum(to_rational(t));
    for (const auto& z : exact.spectrum1) out.spectrum1.push_back(to_double(z));
    for (const auto& z : exact.spectrum2) out.spectrum2.push_back(to_double(z));
    for (std::size_t a = 0; a < exact.spectrum1.size(); ++a) {
      const auto& v = exact.point_spectrum[a * exact.spectrum2.size()].eigenvector.v1;
      ComplexVector<double> d;
      for (const auto& z : v) d.push_back(to_double(z));
      vecs[0].push_back(std::move(d));
    }
    for (std::size_t b = 0; b < exact.spectrum2.size(); ++b) {
      const auto& v = exact.point_spectrum[b].eigenvector.v2;
      ComplexVector<double> d;
      for (const auto& z : v) d.push_back(to_double(z));
      vecs[1].push_back(std::move(d));
    }
  }
  pair_up(out, vecs[0], vecs[1]);
  return out;
}

// ---------------------------------------------------------------------------
// Towers

HyperbolicD SigmaSequence::at(std::size_t i) const {
  if (i == 0) throw InvalidArgument("sigma sequence is 1-based");
  if (!explicit_values.empty()) {
    if (i > explicit_values.size()) throw InvalidArgument("sigma sequence shorter than the requested dimension");
    return explicit_values[i - 1];
  }
  const double x = static_cast<double>(i);
  return HyperbolicD(std::pow(x, -power1), std::pow(x, -power2));
}

FiniteRankOperator diagonal_tower_operator(const SigmaSequence& sigma, std::size_t n) {
  FiniteRankOperator k;
  k.ambient.dim = n;
  for (std::size_t i = 1; i <= n; ++i) {
    k.sigmas.push_back(sigma.at(i));
    BicomplexVectorD g(n);
    g.v1[i - 1] = ComplexD(1.0);
    g.v2[i - 1] = ComplexD(1.0);
    k.gs.push_back(std::move(g));
  }
  return k;
}

ComponentTowerReport component_tower_report(const MatrixD& k, double epsilon, const JacobiOptions& options) {
  ComponentTowerReport r;
  r.dim = k.rows();
  r.eigenvalues = hermitian_eigen(k, options).values;
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
            [](double a, double b) { return std::fabs(a) > std::fabs(b); });
  r.outside_count = static_cast<std::size_t>(std::count_if(
      r.eigenvalues.begin(), r.eigenvalues.end(), [&](double x) { return !(std::fabs(x) < epsilon); }));
  r.min_modulus = r.eigenvalues.empty() ? 0.0 : std::fabs(r.eigenvalues.back());
  return r;
}

TruncationReport truncation_report(const BicomplexMatrixD& k, const HyperbolicD& epsilon,
                                   const std::vector<HyperbolicD>& diagonal, const JacobiOptions& options) {
  constexpr double kTol = 1e-9;
  TruncationReport r;
  r.dim = k.rows();
  r.components[0] = component_tower_report(k.m1(), epsilon.h1, options);
  r.components[1] = component_tower_report(k.m2(), epsilon.h2, options);

  const auto spec = spectrum(k, kTol, options);
  r.point_spectrum_size = spec.point_spectrum.size();
  r.invertible_members = spec.invertible_members();
  const double knorm = std::max({frobenius_norm(k.m1()), frobenius_norm(k.m2()), 1.0});
  const auto id = BicomplexMatrixD::identity(k.rows());

  for (const auto& e : spec.point_spectrum) {
    if (!e.invertible) continue;
    const auto shifted = e.eigenvalue * id - k;
    const auto det = determinant(shifted);
    const bool singular = determinant_vanishes(shifted.m1(), det.c1(), 1e-10) &&
                          determinant_vanishes(shifted.m2(), det.c2(), 1e-10);
    const auto res = apply(shifted, e.eigenvector);
    const bool both_nonzero = norm2(e.eigenvector.v1) > 0 && norm2(e.eigenvector.v2) > 0;
    const bool residual_ok = norm2(res.v1) <= kTol * knorm * norm2(e.eigenvector.v1) &&
                             norm2(res.v2) <= kTol * knorm * norm2(e.eigenvector.v2);
    if (singular && both_nonzero && residual_ok) ++r.certified_eigenvalues;
  }
  r.all_invertible_certified = r.certified_eigenvalues == r.invertible_members;

  for (const auto& e : spec.point_spectrum) {
    if (!(abs(e.eigenvalue.c1()) < epsilon.h1) && !(abs(e.eigenvalue.c2()) < epsilon.h2)) ++r.pairings_outside;
  }
  for (const auto& s : diagonal) {
    if (s.h1 > epsilon.h1 && s.h2 > epsilon.h2) ++r.diagonal_above;
  }

  // One-component eigenvalues: λ1 ∈ σ(K1) paired with a nonzero μ outside σ(K2).
  double radius2 = 0;
  for (const auto& z : spec.spectrum2) radius2 = std::max(radius2, abs(z));
  const ComplexD mu(radius2 + 1.0);
  for (std::size_t a = 0; a < spec.spectrum1.size(); ++a) {
    const ComplexD& l1 = spec.spectrum1[a];
    if (l1.is_zero()) continue;
    ++r.mixed_samples;
    const auto lambda = BicomplexD::from_idempotent(l1, mu);
    if (spec.contains(lambda)) ++r.mixed_in_spectrum;
    if (spec.is_eigenvalue(lambda)) ++r.mixed_strict_eigenvalues;
    const auto& v1 = spec.point_spectrum[a * spec.spectrum2.size()].eigenvector.v1;
    const auto res = (scalar_identity(k.rows(), l1) - k.m1()) * v1;
    if (norm2(res) <= kTol * knorm * norm2(v1)) ++r.mixed_relaxed_witnesses;
  }
  return r;
}

TowerReport check_compact_spectral_properties(const SigmaSequence& sigma, const std::vector<std::size_t>& dims,
                                              const HyperbolicD& epsilon, const JacobiOptions& options) {
  TowerReport report;
  report.epsilon = epsilon;
  std::vector<std::size_t> sorted = dims;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t n : sorted) {
    const auto k = diagonal_tower_operator(sigma, n);
    report.truncations.push_back(truncation_report(k.dense(), epsilon, k.sigmas, options));
  }
  report.moduli_decrease = true;
  for (std::size_t t = 1; t < report.truncations.size(); ++t) {
    for (int c = 0; c < 2; ++c) {
      if (report.truncations[t].components[c].min_modulus > report.truncations[t - 1].components[c].min_modulus) {
        report.moduli_decrease = false;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Riesz witness

std::vector<ComplexVector<double>> orthonormalize(const std::vector<ComplexVector<double>>& vectors,
                                                  double drop_tol) {
  std::vector<ComplexVector<double>> q;
  for (const auto& v : vectors) {
    const double original = norm2(v);
    if (original == 0.0) continue;
    ComplexVector<double> w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : q) {
        const ComplexD c = dot(w, b);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
      }
    }
    const double nw = norm2(w);
    if (nw <= drop_tol * original) continue;
    for (auto& z : w) z *= ComplexD(1.0 / nw);
    q.push_back(std::move(w));
  }
  return q;
}

BicomplexVectorD riesz_witness(const std::vector<BicomplexVectorD>& basis, std::size_t dim, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("riesz_witness: r must lie in (0, 1)");
  if (dim == 0) throw InvalidArgument("riesz_witness: ambient dimension must be positive");
  ComplexVector<double> y[2];
  for (int c = 1; c <= 2; ++c) {
    std::vector<ComplexVector<double>> vs;
    for (const auto& b : basis) {
      if (b.size() != dim) throw ShapeMismatch("basis vector length differs from the ambient dimension");
      vs.push_back(part(b, c));
    }
    const auto q = orthonormalize(vs);
    const Component which = c == 1 ? Component::first : Component::second;
    if (q.empty()) throw ZeroSubspace(which);
    if (q.size() >= dim) throw SubspaceIsFull(which);

    // Unit vector orthogonal to X_c: the standard basis vector with the
    // largest residual after projection, normalized.
    ComplexVector<double> best;
    double best_norm = -1;
    for (std::size_t k = 0; k < dim; ++k) {
      ComplexVector<double> e(dim);
      e[k] = ComplexD(1.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : q) {
          const ComplexD coef = dot(e, b);
          for (std::size_t i = 0; i < dim; ++i) e[i] -= coef * b[i];
        }
      }
      const double ne = norm2(e);
      if (ne > best_norm) {
        best_norm = ne;
        best = std::move(e);
      }
    }
    for (auto& z : best) z *= ComplexD(1.0 / best_norm);

    const double s = std::sqrt(1.0 - r * r);
    ComplexVector<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = ComplexD(r) * best[i] + ComplexD(s) * q.front()[i];
    y[c - 1] = std::move(out);
  }
  return {y[0], y[1]};
}

// ---------------------------------------------------------------------------
// Finite-rank approximation

SingularTriples singular_triples(const MatrixD& t, const JacobiOptions& options) {
  if (!t.is_square()) throw NotSquare(t.rows(), t.cols());
  const std::size_t n = t.rows();
  const auto right = hermitian_eigen(t.adjoint() * t, options);
  SingularTriples out;
  for (std::size_t k = n; k-- > 0;) {
    out.right.push_back(right.vectors.column(k));
    // ||T v|| is accurate to machine precision; sqrt of the eigenvalue of
    // T*T only to sqrt(eps) times the largest singular value.
    out.values.push_back(norm2(t * out.right.back()));
  }
  // Below sqrt(eps) relative, T v is dominated by rounding and no longer
  // orthogonal to the earlier left vectors.
  const double cutoff = 1e-7 * std::max(out.values.empty() ? 0.0 : out.values.front(), 1e-300);
  std::vector<ComplexVector<double>> left;
  for (std::size_t k = 0; k < n && out.values[k] > cutoff; ++k) {
    ComplexVector<double> u = t * out.right[k];
    for (auto& z : u) z *= ComplexD(1.0 / out.values[k]);
    left.push_back(std::move(u));
  }
  if (left.size() < n) {
    const auto lhs = hermitian_eigen(t * t.adjoint(), options);
    std::vector<ComplexVector<double>> pool = left;
    for (std::size_t k = n; k-- > 0;) pool.push_back(lhs.vectors.column(k));
    auto completed = orthonormalize(pool, 1e-8);
    completed.resize(n);
    left = std::move(completed);
  }
  out.left = std::move(left);
  return out;
}

FiniteRankOperator best_rank_approximation(const BicomplexMatrixD& t, std::size_t rank, const JacobiOptions& options) {
  if (!t.is_square()) throw NotSquare(t.rows(), t.cols());
  const std::size_t n = t.rows();
  const auto s1 = singular_triples(t.m1(), options);
  const auto s2 = singular_triples(t.m2(), options);
  FiniteRankOperator k;
  k.ambient.dim = n;
  for (std::size_t i = 0; i < std::min(rank, n); ++i) {
    k.sigmas.emplace_back(s1.values[i], s2.values[i]);
    k.gs.emplace_back(s1.right[i], s2.right[i]);
    k.hs.emplace_back(s1.left[i], s2.left[i]);
  }
  return k;
}

ApproximationReport norm_limit_demo(const BicomplexMatrixD& t, const std::vector<std::size_t>& ranks,
                                    const JacobiOptions& options) {
  if (!t.is_square()) throw NotSquare(t.rows(), t.cols());
  const std::size_t n = t.rows();
  const auto s1 = singular_triples(t.m1(), options);
  const auto s2 = singular_triples(t.m2(), options);
  ApproximationReport report;
  report.norm = hyperbolic_operator_norm(t, options);
  for (std::size_t r : ranks) {
    const auto k = best_rank_approximation(t, r, options);
    ApproximationRow row;
    row.rank = r;
    row.error = hyperbolic_operator_norm(t - k.dense(), options);
    row.expected = r < n ? HyperbolicD(s1.values[r], s2.values[r]) : HyperbolicD(0.0, 0.0);
    row.canonical = k.is_canonical();
    report.rows.push_back(std::move(row));
  }
  auto sorted = report.rows;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
  const double slack = 1e-12 * std::max({report.norm.h1, report.norm.h2, 1.0});
  report.nonincreasing = true;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].error.h1 > sorted[i - 1].error.h1 + slack || sorted[i].error.h2 > sorted[i - 1].error.h2 + slack) {
      report.nonincreasing = false;
    }
  }
  return report;
}

}  // namespace bicx
