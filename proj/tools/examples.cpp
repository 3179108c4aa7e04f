#include "examples.hpp"

#include <algorithm>

#include "bicomplex/eigenvalues.hpp"
#include "bicomplex/jordan.hpp"
#include "bicomplex/lattice.hpp"

namespace bicx::examples {

using io::json;

namespace {

void check(json& checks, const std::string& name, bool pass, json detail = nullptr) {
  json c = {{"name", name}, {"pass", pass}};
  if (!detail.is_null()) c["detail"] = std::move(detail);
  checks.push_back(std::move(c));
}

bool all_pass(const json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.at("pass").get<bool>(); });
}

HyperbolicD relative_residual(const BicomplexMatrixD& a, const BicomplexMatrixD& b) {
  const auto diff = frobenius_norm(a - b);
  const auto scale = frobenius_norm(a);
  return HyperbolicD(diff.h1 / std::max(scale.h1, 1.0), diff.h2 / std::max(scale.h2, 1.0));
}

}  // namespace

BicomplexD example1_default_z() { return BicomplexD::from_euclidean(ComplexD(3, 4), ComplexD(1, -2)); }

BicomplexMatrixD example1_matrix(const BicomplexD& z) {
  if (!z.is_invertible()) throw InvalidArgument("example 1 needs an invertible z (both idempotent components nonzero)");
  BicomplexMatrixD a(2, 2);
  a.set(0, 1, z);
  a.set(1, 0, conjugate(z));
  return a;
}

json example1(const BicomplexD& z, const Example1Options& options) {
  const auto a = example1_matrix(z);
  const double r1 = abs(z.c1());
  const double r2 = abs(z.c2());
  const auto h = BicomplexD::from_idempotent(ComplexD(r1), ComplexD(r2));
  const auto mu = BicomplexD::from_idempotent(ComplexD(r1), ComplexD(-r2));
  const auto zbar = conjugate(z);

  json checks = json::array();
  json pairs = json::array();
  json diagonalizations = json::array();
  const auto id = BicomplexMatrixD::identity(2);

  int which = 0;
  for (const auto& lambda : {h, mu}) {
    ++which;
    pairs.push_back({io::write(lambda), io::write(-lambda)});
    for (const auto& l : {lambda, -lambda}) {
      const auto shifted = a - l * id;
      const auto det = determinant(shifted);
      const bool ok = determinant_vanishes(shifted.m1(), det.c1(), options.det_tol) &&
                      determinant_vanishes(shifted.m2(), det.c2(), options.det_tol);
      check(checks, "det(A - lambda I) = 0 for pair " + std::to_string(which), ok,
            {{"lambda", io::write(l)}, {"det", io::write(det)}});
    }

    BicomplexMatrixD p(2, 2), d(2, 2);
    p.set(0, 0, lambda);
    p.set(0, 1, -lambda);
    p.set(1, 0, zbar);
    p.set(1, 1, zbar);
    d.set(0, 0, lambda);
    d.set(1, 1, -lambda);
    const auto rebuilt = p * d * inverse(p, options.det_tol);
    const auto res = relative_residual(a, rebuilt);
    check(checks, "A = P D P^-1 for pair " + std::to_string(which),
          res.h1 <= options.residual_tol && res.h2 <= options.residual_tol, {{"residual", io::write(res)}});
    diagonalizations.push_back({{"p", io::write(p)}, {"d", io::write(d)}, {"residual", io::write(res)}});
  }

  const auto enumerated = enumerate_diagonalizations(a, 1e-8, options.jacobi);
  json spectral = json::array();
  bool spectral_ok = true;
  for (const auto& s : enumerated) {
    spectral.push_back({{"pairing", s.pairing},
                        {"d", io::write(s.d)},
                        {"unitarity", io::write(s.residuals.unitarity)},
                        {"reconstruction", io::write(s.residuals.reconstruction)}});
    spectral_ok = spectral_ok && s.residuals.unitarity.h1 <= options.residual_tol &&
                  s.residuals.unitarity.h2 <= options.residual_tol &&
                  s.residuals.reconstruction.h1 <= options.residual_tol &&
                  s.residuals.reconstruction.h2 <= options.residual_tol;
  }
  check(checks, "spectral enumeration has 2! entries", enumerated.size() == 2,
        {{"count", enumerated.size()}});
  check(checks, "spectral diagonalizations reconstruct A", spectral_ok);
  check(checks, "A is self-adjoint", is_self_adjoint(a, options.jacobi.selfadjoint_tol));

  const auto eig = eigenvalues(a, 1e-9, options.jacobi);
  auto listed = [&](const BicomplexD& l) {
    return std::any_of(eig.begin(), eig.end(), [&](const BicomplexD& x) { return approx_equal(x, l, {1e-9, 1e-9}); });
  };
  check(checks, "eigenvalue set contains +|z|_h and -|z|_h", listed(h) && listed(-h));

  return {{"example", 1},
          {"z", io::write(z)},
          {"matrix", io::write(a)},
          {"eigenvalue_pairs", pairs},
          {"diagonalizations", diagonalizations},
          {"spectral_diagonalizations", spectral},
          {"checks", checks},
          {"pass", all_pass(checks)}};
}

BicomplexMatrixQ example2_matrix() {
  MatrixQ n(2, 2);
  n(0, 1) = ComplexQ(1);
  return BicomplexMatrixQ(MatrixQ(2, 2), n);
}

json example2() {
  const auto a = example2_matrix();
  const auto jd = bicomplex_jordan(a);
  const auto lattice = bicomplex_lattice(a);

  json checks = json::array();
  check(checks, "component 1 Jordan blocks are {1, 1}", jd.comp1.block_sizes(0) == std::vector<std::size_t>{1, 1});
  check(checks, "component 2 Jordan blocks are {2}", jd.comp2.block_sizes(0) == std::vector<std::size_t>{2});

  const auto alphabet = jd.superdiagonal_alphabet();
  json symbols = json::array();
  for (auto s : alphabet) symbols.push_back(to_string(s));
  const bool within = std::all_of(alphabet.begin(), alphabet.end(), [](SuperdiagonalSymbol s) {
    return s == SuperdiagonalSymbol::zero || s == SuperdiagonalSymbol::e_dagger;
  });
  check(checks, "superdiagonal symbols lie in {0, e'} and e' occurs",
        within && alphabet.count(SuperdiagonalSymbol::e_dagger) == 1, symbols);

  check(checks, "lattice has 4 x 3 = 12 nodes", lattice.size() == 12, {{"nodes", lattice.size()}});
  const bool invariant =
      std::all_of(lattice.nodes.begin(), lattice.nodes.end(), [&](const auto& s) { return is_invariant(a, s); });
  check(checks, "every node is invariant", invariant);
  auto expected = containment_reduction(lattice.nodes);
  std::sort(expected.begin(), expected.end());
  check(checks, "covers are the transitive reduction of containment", expected == lattice.covers,
        {{"covers", lattice.covers.size()}});

  json labels = json::array();
  for (const auto& l : lattice.labels) labels.push_back(l);
  return {{"example", 2},
          {"matrix", io::write(a)},
          {"p", io::write(jd.p)},
          {"j", io::write(jd.j)},
          {"superdiagonal_alphabet", symbols},
          {"labels", labels},
          {"covers", lattice.covers},
          {"warnings", lattice.info.warnings},
          {"checks", checks},
          {"pass", all_pass(checks)}};
}

}  // namespace bicx::examples
