#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

#include "bicomplex/field.hpp"

namespace bicx {

/// Complex number over a coefficient field.  `std::complex` is only specified
/// for floating types, so the exact backend needs its own representation; the
/// floating backend shares it for uniformity.
template <Real R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(const R& r) : re(r), im(0) {}  // NOLINT: real embedding is implicit
  Complex(const R& r, const R& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT

  static Complex i() { return Complex(R(0), R(1)); }

  bool is_zero() const { return bicx::is_zero(re) && bicx::is_zero(im); }
  bool is_real() const { return bicx::is_zero(im); }

  Complex conj() const { return Complex(re, R(-im)); }

  /// |z|^2, always in the coefficient field.
  R norm2() const { return R(re * re + im * im); }

  Complex operator-() const { return Complex(R(-re), R(-im)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    R r = re * o.re - im * o.im;
    R i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    const R d = o.norm2();
    R r = (re * o.re + im * o.im) / d;
    R i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using ComplexQ = Complex<Rational>;
using ComplexD = Complex<double>;

inline double abs(const ComplexD& z) { return std::hypot(z.re, z.im); }
inline double arg(const ComplexD& z) { return std::atan2(z.im, z.re); }

inline std::complex<double> to_std(const ComplexD& z) { return {z.re, z.im}; }
inline ComplexD from_std(const std::complex<double>& z) { return {z.real(), z.imag()}; }

inline ComplexD to_double(const ComplexQ& z) { return {z.re.get_d(), z.im.get_d()}; }
inline ComplexD to_double(const ComplexD& z) { return z; }
inline ComplexQ to_rational(const ComplexD& z) { return {to_rational(z.re), to_rational(z.im)}; }
inline ComplexQ to_rational(const ComplexQ& z) { return z; }

inline bool approx_equal(const ComplexD& a, const ComplexD& b, const Tolerance& tol = {}) {
  return tol.close(a.re, b.re) && tol.close(a.im, b.im);
}

/// Total order used for canonical sorting: lexicographic on (re, im).
template <Real R>
bool lex_less(const Complex<R>& a, const Complex<R>& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

template <Real R>
std::string to_string(const Complex<R>& z) {
  auto part = [](const R& x) {
    if constexpr (is_exact_v<R>) {
      return bicx::to_string(x);
    } else {
      return std::to_string(x);
    }
  };
  if (z.is_real()) return part(z.re);
  if (is_zero(z.re)) return part(z.im) + "i";
  std::string im = part(z.im);
  if (im.front() != '-') im = "+" + im;
  return part(z.re) + im + "i";
}

template <Real R>
std::ostream& operator<<(std::ostream& os, const Complex<R>& z) {
  return os << to_string(z);
}

}  // namespace bicx
