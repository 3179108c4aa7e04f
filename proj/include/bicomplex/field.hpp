#pragma once

// Coefficient fields for the two backends: exact rationals (GMP) and binary
// floating point.  Everything above this header is templated on the real
// type `R` and dispatches on `is_exact_v<R>`.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace bicx {

using Rational = mpq_class;

template <class R>
inline constexpr bool is_exact_v = std::is_same_v<R, Rational>;

template <class R>
concept Real = std::is_same_v<R, Rational> || std::is_same_v<R, double>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(double x) { return (x > 0) - (x < 0); }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

/// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double x);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts "p/q", "p", and finite decimals such as "-0.125" (converted exactly).
Rational parse_rational(std::string_view text);

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions).
Rational rationalize(double x, long max_den = 1000000);

/// Absolute + relative tolerance used by floating-backend equality.
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;

  bool close(double a, double b) const {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= abs + rel * scale;
  }
};

}  // namespace bicx
