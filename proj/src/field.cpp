#include "bicomplex/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bicomplex/errors.hpp"

namespace bicx {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("cannot convert a non-finite double to a rational");
  Rational q(x);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw InvalidArgument("empty rational literal");

  const auto dot = s.find('.');
  const auto exp = s.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    if (s.find('/') != std::string::npos) throw InvalidArgument("malformed rational literal '" + s + "'");
    // Decimal literal: mantissa digits scaled by a power of ten, exactly.
    std::string mantissa = exp == std::string::npos ? s : s.substr(0, exp);
    long exponent = 0;
    if (exp != std::string::npos) {
      try {
        std::size_t used = 0;
        exponent = std::stol(s.substr(exp + 1), &used);
        if (used != s.size() - exp - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidArgument("malformed exponent in '" + s + "'");
      }
    }
    if (const auto d = mantissa.find('.'); d != std::string::npos) {
      exponent -= static_cast<long>(mantissa.size() - d - 1);
      mantissa.erase(d, 1);
    }
    mpz_class digits;
    if (mantissa.empty() || mantissa == "-" || mantissa == "+" || digits.set_str(mantissa, 10) != 0) {
      throw InvalidArgument("malformed decimal literal '" + s + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational q = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
    q.canonicalize();
    return q;
  }

  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw InvalidArgument("cannot rationalize a non-finite double");
  // Continued-fraction convergents h/k until the denominator bound is hit.
  const bool negative = x < 0;
  double v = std::fabs(x);
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(v));
  mpz_class k_prev = 0, k = 1;
  double frac = v - std::floor(v);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    v = 1.0 / frac;
    const long a = static_cast<long>(std::floor(v));
    frac = v - std::floor(v);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational q(h, k);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace bicx
