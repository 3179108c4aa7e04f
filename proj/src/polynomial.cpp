#include "bicomplex/polynomial.hpp"

#include <algorithm>
#include <set>

namespace bicx {

Polynomial::Polynomial(std::vector<ComplexQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, ComplexQ c) {
  std::vector<ComplexQ> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ComplexQ& Polynomial::coefficient(std::size_t k) const {
  static const ComplexQ zero;
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

ComplexQ Polynomial::evaluate(const ComplexQ& x) const {
  ComplexQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<Polynomial, ComplexQ> Polynomial::divide_linear(const ComplexQ& root) const {
  if (coeffs_.empty()) return {Polynomial(), ComplexQ()};
  // Synthetic division, highest coefficient first.
  std::vector<ComplexQ> q(coeffs_.size() - 1);
  ComplexQ carry;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    carry = carry * root + coeffs_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {Polynomial(std::move(q)), carry};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<ComplexQ> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<ComplexQ> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ComplexQ> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const ComplexQ& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term;
    const bool unit = c == ComplexQ(1) && k > 0;
    const bool neg_unit = c == ComplexQ(-1) && k > 0;
    if (neg_unit) {
      term = "-";
    } else if (!unit) {
      term = c.is_real() || bicx::is_zero(c.re) ? bicx::to_string(c) : "(" + bicx::to_string(c) + ")";
    }
    if (k >= 1) term += "x";
    if (k >= 2) term += "^" + std::to_string(k);
    if (!out.empty()) out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

Polynomial char_poly(const MatrixQ& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  std::vector<ComplexQ> c(n + 1);
  c[n] = ComplexQ(1);
  MatrixQ m(n, n);
  const MatrixQ id = MatrixQ::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    const MatrixQ am = a * m;
    ComplexQ trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace * ComplexQ(Rational(1, static_cast<unsigned long>(k)));
  }
  return Polynomial(std::move(c));
}

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;
};

mpz_class isqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Positive divisors of n > 0 by trial division.  Factors beyond the trial
// bound are treated as prime.
std::vector<mpz_class> integer_divisors(mpz_class n) {
  std::vector<std::pair<mpz_class, unsigned>> factors;
  const mpz_class bound = 10000000;
  for (mpz_class p = 2; p * p <= n && p <= bound; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Coefficients scaled to Gaussian integers with unit integer content.
std::vector<GaussInt> clear_denominators(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den_mpz_t());
  }
  std::vector<GaussInt> out;
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    Rational re = c.re * l;
    Rational im = c.im * l;
    out.push_back({re.get_num(), im.get_num()});
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().im.get_mpz_t());
  }
  if (g > 1)
    for (auto& z : out) {
      z.re /= g;
      z.im /= g;
    }
  return out;
}

struct LexLess {
  bool operator()(const ComplexQ& a, const ComplexQ& b) const { return lex_less(a, b); }
};

}  // namespace

std::vector<std::pair<mpz_class, mpz_class>> gaussian_divisors(const mpz_class& re, const mpz_class& im) {
  const mpz_class norm = re * re + im * im;
  if (norm == 0) throw InvalidArgument("gaussian_divisors: zero has no finite divisor set");
  std::vector<std::pair<mpz_class, mpz_class>> out;
  for (const auto& m : integer_divisors(norm)) {
    const mpz_class top = isqrt(m);
    for (mpz_class x = 1; x <= top; ++x) {
      const mpz_class rest = m - x * x;
      const mpz_class y = isqrt(rest);
      if (y * y != rest) continue;
      // d = x + iy divides z iff z * conj(d) is divisible by N(d) = m.
      const mpz_class pr = re * x + im * y;
      const mpz_class pi = im * x - re * y;
      if (pr % m == 0 && pi % m == 0) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<RootMultiplicity> split_eigenvalues(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("split_eigenvalues: zero polynomial");
  std::vector<RootMultiplicity> roots;
  Polynomial rest = p;

  std::size_t zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
    rest = rest.divide_linear(ComplexQ()).first;
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({ComplexQ(), zero_mult});

  if (rest.degree() > 0) {
    const auto ints = clear_denominators(rest);
    const auto num_divs = gaussian_divisors(ints.front().re, ints.front().im);
    const auto den_divs = gaussian_divisors(ints.back().re, ints.back().im);
    const ComplexQ units[] = {ComplexQ(1), ComplexQ(0, 1), ComplexQ(-1), ComplexQ(0, -1)};

    std::set<ComplexQ, LexLess> candidates;
    for (const auto& [nr, ni] : num_divs) {
      const ComplexQ d{Rational(nr), Rational(ni)};
      for (const auto& [qr, qi] : den_divs) {
        const ComplexQ q{Rational(qr), Rational(qi)};
        const ComplexQ base = d / q;
        for (const auto& u : units) candidates.insert(base * u);
      }
    }
    for (const auto& c : candidates) {
      if (rest.degree() <= 0) break;
      std::size_t mult = 0;
      while (rest.degree() > 0) {
        auto [q, r] = rest.divide_linear(c);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) roots.push_back({c, mult});
    }
  }

  if (rest.degree() > 0) throw DoesNotSplit(rest.to_string());
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return lex_less(a.root, b.root); });
  return roots;
}

}  // namespace bicx
