// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "bicomplex/lattice.hpp"
#include "bicomplex/operator.hpp"
#include "examples.hpp"
#include "support.hpp"

using namespace bicx;
using bicx::testing::Gen;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Product in the Euclidean form z = z1 + j z2 with j^2 = -1.
BicomplexQ euclidean_mul(const BicomplexQ& a, const BicomplexQ& b) {
  const auto [a1, a2] = a.to_euclidean();
  const auto [b1, b2] = b.to_euclidean();
  return BicomplexQ::from_euclidean(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1);
}

Outcome criterion1() {
  Gen g(1001);
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  const int cases = 500;
  for (int t = 0; t < cases; ++t) {
    const std::size_t m = 1 + g.index(5), k = 1 + g.index(5), n = 1 + g.index(5);
    const auto a = g.bmatrix_q(m, k), b = g.bmatrix_q(k, n);
    const auto c = mat_mul(a, b);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BicomplexQ s = BicomplexQ::zero();
        for (std::size_t l = 0; l < k; ++l) s += euclidean_mul(a.at(i, l), b.at(l, j));
        if (!(s == c.at(i, j))) ++bad;
      }
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 10.0, fmt("%d pairs, %d mismatched entries, %.2fs", cases, bad, secs)};
}

MatrixQ maybe_singular(Gen& g, std::size_t n) {
  MatrixQ m = g.matrix_q(n, n, 3, 2);
  if (g.integer(0, 2) == 0) {
    // Copy a combination of two columns into a third.
    const auto c = g.complex_q(2, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = m(i, 0) + c * m(i, 1);
  }
  return m;
}

Outcome criterion2() {
  Gen g(1002);
  int bad_iff = 0, bad_mult = 0, singular = 0;
  const int cases = 200;
  for (int t = 0; t < cases; ++t) {
    const BicomplexMatrixQ a(maybe_singular(g, 4), maybe_singular(g, 4));
    const BicomplexMatrixQ b(maybe_singular(g, 4), maybe_singular(g, 4));
    const auto da = determinant(a);
    const bool nonsingular = !da.c1().is_zero() && !da.c2().is_zero();
    bool inverted = false;
    try {
      const auto inv = inverse(a);
      inverted = mat_mul(a, inv) == BicomplexMatrixQ::identity(4);
    } catch (const SingularComponent&) {
    }
    if (inverted != nonsingular) ++bad_iff;
    if (!nonsingular) ++singular;
    if (!(determinant(mat_mul(a, b)) == da * determinant(b))) ++bad_mult;
  }
  return {bad_iff == 0 && bad_mult == 0 && singular > 0,
          fmt("%d cases (%d singular), iff failures %d, det(AB) failures %d", cases, singular, bad_iff, bad_mult)};
}

Outcome criterion3() {
  const auto z = examples::example1_default_z();
  const auto report = examples::example1(z);
  const auto a = examples::example1_matrix(z);
  const auto all = enumerate_diagonalizations(a);
  double worst = 0;
  for (const auto& s : all)
    worst = std::max({worst, s.residuals.reconstruction.h1, s.residuals.reconstruction.h2});
  const bool pass = report.at("pass").get<bool>() && all.size() == 2 && worst <= 1e-9;
  return {pass, fmt("example checks %s, %zu diagonalizations, worst residual %.2e",
                    report.at("pass").get<bool>() ? "ok" : "failed", all.size(), worst)};
}

bool alphabet_ok(const BicomplexMatrixQ& j) {
  const ComplexQ zero(0), one(1);
  for (std::size_t i = 0; i + 1 < j.rows(); ++i) {
    const auto s = j.at(i, i + 1);
    for (const auto& c : {s.c1(), s.c2()})
      if (!(c == zero || c == one)) return false;
  }
  return true;
}

Outcome criterion4() {
  Gen g(1004);
  int bad = 0;
  const int cases = 100;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = 1 + g.index(5);
    const auto b1 = testing::random_jordan_blocks(g, n), b2 = testing::random_jordan_blocks(g, n);
    const BicomplexMatrixQ a(testing::conjugate_by_random(g, jordan_matrix(b1, n)),
                             testing::conjugate_by_random(g, jordan_matrix(b2, n)));
    const auto jd = bicomplex_jordan(a);
    const auto pinv = inverse(jd.p);
    const bool ok = testing::block_multiset(jd.comp1.blocks) == testing::block_multiset(b1) &&
                    testing::block_multiset(jd.comp2.blocks) == testing::block_multiset(b2) &&
                    mat_mul(mat_mul(jd.p, jd.j), pinv) == a && alphabet_ok(jd.j);
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%d matrices, %d failures", cases, bad)};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = examples::example2_matrix();
  const auto l = bicomplex_lattice(a);
  bool invariant = true;
  for (const auto& node : l.nodes) invariant = invariant && is_invariant(a, node);
  auto expected = containment_reduction(l.nodes);
  auto covers = l.covers;
  std::sort(expected.begin(), expected.end());
  std::sort(covers.begin(), covers.end());
  const double secs = seconds_since(t0);
  const bool pass = l.size() == 12 && invariant && covers == expected && secs < 1.0;
  return {pass, fmt("%zu nodes, invariant %s, %zu covers, reduction %s, %.3fs", l.size(), invariant ? "yes" : "no",
                    covers.size(), covers == expected ? "matches" : "differs", secs)};
}

Outcome criterion6() {
  Gen g(1006);
  double worst_u = 0, worst_r = 0, worst_i = 0;
  const int cases = 50;
  for (int t = 0; t < cases; ++t) {
    const BicomplexMatrixD a(g.hermitian(6, 2.0), g.hermitian(6, 2.0));
    const auto s = selfadjoint_diagonalize(a);
    worst_u = std::max({worst_u, s.residuals.unitarity.h1, s.residuals.unitarity.h2});
    worst_r = std::max({worst_r, s.residuals.reconstruction.h1, s.residuals.reconstruction.h2});
    worst_i = std::max({worst_i, s.residuals.imaginary.h1, s.residuals.imaginary.h2});
  }
  return {worst_u <= 1e-9 && worst_r <= 1e-9 && worst_i <= 1e-9,
          fmt("%d matrices, unitarity %.2e, reconstruction %.2e, imaginary %.2e", cases, worst_u, worst_r, worst_i)};
}

Outcome criterion7() {
  SigmaSequence sigma;
  sigma.power1 = 1.0;
  sigma.power2 = 2.0;
  const auto r = check_compact_spectral_properties(sigma, {8, 16, 32}, HyperbolicD(0.1, 0.1));
  bool pass = r.truncations.size() == 3;
  std::string detail;
  for (const auto& t : r.truncations) {
    pass = pass && t.all_invertible_certified && t.diagonal_above == 3;
    detail += fmt("n=%zu certified %zu/%zu above %zu; ", t.dim, t.certified_eigenvalues, t.invertible_members,
                  t.diagonal_above);
  }
  return {pass, detail + "limit " + r.limit_witness};
}

MatrixD random_unitary(Gen& g, std::size_t n) {
  std::vector<ComplexVector<double>> cols;
  const MatrixD m = g.matrix_d(n, n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(m.column(j));
  const auto q = orthonormalize(cols);
  return MatrixD::from_columns(q, n);
}

Outcome criterion8() {
  Gen g(1008);
  double worst = 0;
  bool monotone = true, canonical = true;
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 6;
    // T = U diag(σ) V* with σ known in advance.
    std::vector<double> s1, s2;
    for (std::size_t i = 0; i < n; ++i) {
      s1.push_back(g.real(0.1, 5.0));
      s2.push_back(g.real(0.1, 5.0));
    }
    std::sort(s1.rbegin(), s1.rend());
    std::sort(s2.rbegin(), s2.rend());
    auto build = [&](const std::vector<double>& s) {
      std::vector<ComplexD> d;
      for (double x : s) d.emplace_back(x);
      return random_unitary(g, n) * MatrixD::diagonal(d) * random_unitary(g, n).adjoint();
    };
    const BicomplexMatrixD tm(build(s1), build(s2));
    std::vector<std::size_t> ranks;
    for (std::size_t r = 0; r <= n; ++r) ranks.push_back(r);
    const auto rep = norm_limit_demo(tm, ranks);
    monotone = monotone && rep.nonincreasing;
    for (const auto& row : rep.rows) {
      const double e1 = row.rank < n ? s1[row.rank] : 0.0, e2 = row.rank < n ? s2[row.rank] : 0.0;
      worst = std::max({worst, std::fabs(row.error.h1 - e1), std::fabs(row.error.h2 - e2)});
      canonical = canonical && row.canonical;
    }
  }
  return {worst <= 1e-9 && monotone && canonical,
          fmt("worst |error - sigma_{r+1}| %.2e, nonincreasing %s, canonical %s", worst, monotone ? "yes" : "no",
              canonical ? "yes" : "no")};
}

double projection_distance(const ComplexVector<double>& y, const std::vector<ComplexVector<double>>& basis) {
  // Independent modified Gram-Schmidt, then subtract the projection.
  std::vector<ComplexVector<double>> q;
  for (auto v : basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : q) {
        const ComplexD c = dot(v, u);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    const double nv = norm2(v);
    if (nv < 1e-10) continue;
    for (auto& z : v) z *= ComplexD(1.0 / nv);
    q.push_back(std::move(v));
  }
  auto res = y;
  for (const auto& u : q) {
    const ComplexD c = dot(res, u);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] -= c * u[i];
  }
  return norm2(res);
}

Outcome criterion9() {
  Gen g(1009);
  double worst_norm = 0, worst_dist = 0;
  const int cases = 20;
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = 2 + g.index(7);
    const std::size_t k = 1 + g.index(n - 1);
    std::vector<BicomplexVectorD> basis;
    for (std::size_t i = 0; i < k; ++i) {
      BicomplexVectorD v(n);
      for (std::size_t c = 0; c < n; ++c) v.set(c, g.scalar_d());
      basis.push_back(std::move(v));
    }
    for (double r : {0.1, 0.5, 0.9}) {
      const auto y = riesz_witness(basis, n, r);
      const auto nrm = vector_hyperbolic_norm(y);
      worst_norm = std::max({worst_norm, std::fabs(nrm.h1 - 1.0), std::fabs(nrm.h2 - 1.0)});
      for (int c = 1; c <= 2; ++c) {
        std::vector<ComplexVector<double>> comp;
        for (const auto& b : basis) comp.push_back(b.component(c));
        worst_dist = std::max(worst_dist, std::fabs(projection_distance(y.component(c), comp) - r));
      }
    }
  }
  return {worst_norm <= 1e-10 && worst_dist <= 1e-10,
          fmt("%d subspaces x 3 radii, norm error %.2e, distance error %.2e", cases, worst_norm, worst_dist)};
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
