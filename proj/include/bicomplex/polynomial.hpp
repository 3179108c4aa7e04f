#pragma once

#include <string>
#include <vector>

#include "bicomplex/matrix.hpp"

namespace bicx {

/// Polynomial with Gaussian-rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ComplexQ> coeffs);

  static Polynomial monomial(std::size_t degree, ComplexQ c = ComplexQ(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<ComplexQ>& coefficients() const { return coeffs_; }
  const ComplexQ& coefficient(std::size_t k) const;
  const ComplexQ& leading() const { return coeffs_.back(); }

  ComplexQ evaluate(const ComplexQ& x) const;

  /// Quotient and remainder of division by (x - root).
  std::pair<Polynomial, ComplexQ> divide_linear(const ComplexQ& root) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<ComplexQ> coeffs_;
};

/// det(xI - A) via the Faddeev-LeVerrier recurrence; monic of degree n.
Polynomial char_poly(const MatrixQ& a);

struct RootMultiplicity {
  ComplexQ root;
  std::size_t multiplicity;
};

/// Full factorization into linear factors over the Gaussian rationals,
/// roots sorted lexicographically by (re, im).  Candidate roots are
/// d/q * unit for Gaussian-integer divisors d of the (denominator-cleared)
/// constant term and q of the leading term; each is verified by exact
/// evaluation.  Throws DoesNotSplit carrying the unfactored remainder.
std::vector<RootMultiplicity> split_eigenvalues(const Polynomial& p);

/// Gaussian-integer divisors of z (z != 0), one per associate class,
/// normalized to re > 0, im >= 0.  Exposed for testing.
std::vector<std::pair<mpz_class, mpz_class>> gaussian_divisors(const mpz_class& re, const mpz_class& im);

}  // namespace bicx
