#pragma once

// Bicomplex and hyperbolic scalars in the idempotent representation
//
//   z = z1 + j z2 = c1 e + c2 e†,   e = (1 + ij)/2,  e† = (1 - ij)/2,
//   c1 = z1 - i z2,  c2 = z1 + i z2.
//
// Scalars are stored only through (c1, c2); the Euclidean pair (z1, z2) is a
// view computed on demand.  All ring operations act componentwise.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <span>
#include <utility>

#include "bicomplex/complex.hpp"
#include "bicomplex/errors.hpp"

namespace bicx {

template <Real R>
class Bicomplex {
 public:
  using complex_type = Complex<R>;

  Bicomplex() = default;
  Bicomplex(const complex_type& c) : c1_(c), c2_(c) {}  // NOLINT: complex embedding
  Bicomplex(int x) : c1_(x), c2_(x) {}                   // NOLINT

  static Bicomplex from_idempotent(complex_type c1, complex_type c2) {
    Bicomplex z;
    z.c1_ = std::move(c1);
    z.c2_ = std::move(c2);
    return z;
  }

  static Bicomplex from_euclidean(const complex_type& z1, const complex_type& z2) {
    const complex_type iz2 = complex_type::i() * z2;
    return from_idempotent(z1 - iz2, z1 + iz2);
  }

  static Bicomplex e() { return from_idempotent(complex_type(1), complex_type(0)); }
  static Bicomplex e_dagger() { return from_idempotent(complex_type(0), complex_type(1)); }
  static Bicomplex zero() { return Bicomplex(0); }
  static Bicomplex one() { return Bicomplex(1); }

  const complex_type& c1() const { return c1_; }
  const complex_type& c2() const { return c2_; }

  /// (z1, z2) with z = z1 + j z2.
  std::pair<complex_type, complex_type> to_euclidean() const {
    const complex_type half(R(1) / R(2));
    complex_type z1 = (c1_ + c2_) * half;
    complex_type z2 = complex_type::i() * (c1_ - c2_) * half;
    return {std::move(z1), std::move(z2)};
  }

  bool is_zero() const { return c1_.is_zero() && c2_.is_zero(); }
  bool is_complex() const { return c1_ == c2_; }
  bool is_invertible() const { return !c1_.is_zero() && !c2_.is_zero(); }
  /// Both idempotent components real: z lies in the hyperbolic numbers.
  bool is_hyperbolic() const { return c1_.is_real() && c2_.is_real(); }

  Bicomplex operator-() const { return from_idempotent(-c1_, -c2_); }

  Bicomplex& operator+=(const Bicomplex& o) {
    c1_ += o.c1_;
    c2_ += o.c2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    c1_ -= o.c1_;
    c2_ -= o.c2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) {
    c1_ *= o.c1_;
    c2_ *= o.c2_;
    return *this;
  }

  friend Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
  friend Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
  friend Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
  friend bool operator==(const Bicomplex& a, const Bicomplex& b) { return a.c1_ == b.c1_ && a.c2_ == b.c2_; }

 private:
  complex_type c1_{};
  complex_type c2_{};
};

using BicomplexQ = Bicomplex<Rational>;
using BicomplexD = Bicomplex<double>;

template <Real R>
Bicomplex<R> add(const Bicomplex<R>& a, const Bicomplex<R>& b) { return a + b; }
template <Real R>
Bicomplex<R> sub(const Bicomplex<R>& a, const Bicomplex<R>& b) { return a - b; }
template <Real R>
Bicomplex<R> mul(const Bicomplex<R>& a, const Bicomplex<R>& b) { return a * b; }

/// Componentwise reciprocal; the ring has zero divisors, so this fails
/// whenever either idempotent component vanishes.
template <Real R>
Bicomplex<R> invert(const Bicomplex<R>& a) {
  const bool z1 = a.c1().is_zero();
  const bool z2 = a.c2().is_zero();
  if (z1 || z2) throw NotInvertible(component_from_flags(z1, z2));
  const Complex<R> one(1);
  return Bicomplex<R>::from_idempotent(one / a.c1(), one / a.c2());
}

template <Real R>
Bicomplex<R> conjugate(const Bicomplex<R>& a) {
  return Bicomplex<R>::from_idempotent(a.c1().conj(), a.c2().conj());
}

/// Floating equality on both idempotent components.
inline bool approx_equal(const BicomplexD& a, const BicomplexD& b, const Tolerance& tol = {}) {
  return approx_equal(a.c1(), b.c1(), tol) && approx_equal(a.c2(), b.c2(), tol);
}

inline BicomplexD to_double(const BicomplexQ& z) {
  return BicomplexD::from_idempotent(to_double(z.c1()), to_double(z.c2()));
}
inline BicomplexD to_double(const BicomplexD& z) { return z; }
inline BicomplexQ to_rational(const BicomplexD& z) {
  return BicomplexQ::from_idempotent(to_rational(z.c1()), to_rational(z.c2()));
}
inline BicomplexQ to_rational(const BicomplexQ& z) { return z; }

namespace detail {

/// Branch `k` of w^(1/n): |w|^(1/n) exp(i (arg w + 2 pi k) / n), arg in (-pi, pi].
inline ComplexD complex_root(const ComplexD& w, unsigned n, unsigned k) {
  if (w.is_zero()) return {};
  const double r = std::pow(abs(w), 1.0 / n);
  const double theta = (arg(w) + 2.0 * std::numbers::pi * k) / n;
  return {r * std::cos(theta), r * std::sin(theta)};
}

inline ComplexD complex_pow(const ComplexD& w, unsigned n) {
  ComplexD out(1.0);
  for (unsigned i = 0; i < n; ++i) out *= w;
  return out;
}

inline ComplexQ complex_pow(const ComplexQ& w, unsigned n) {
  ComplexQ out(1);
  for (unsigned i = 0; i < n; ++i) out *= w;
  return out;
}

}  // namespace detail

/// One of the n^2 bicomplex n-th roots, chosen by a branch index per
/// idempotent component.  On the exact backend the root is returned only when
/// it is itself a Gaussian rational (verified exactly); otherwise the call
/// raises UnsupportedOnExactBackend.
template <Real R>
Bicomplex<R> nth_root(const Bicomplex<R>& a, unsigned n, unsigned branch1, unsigned branch2) {
  if (n == 0) throw InvalidArgument("nth_root: n must be positive");
  if (branch1 >= n || branch2 >= n) throw InvalidArgument("nth_root: branch index must lie in [0, n)");
  const ComplexD r1 = detail::complex_root(to_double(a.c1()), n, branch1);
  const ComplexD r2 = detail::complex_root(to_double(a.c2()), n, branch2);
  if constexpr (is_exact_v<R>) {
    auto exact = [n](const ComplexD& approx, const ComplexQ& target) {
      ComplexQ candidate(rationalize(approx.re), rationalize(approx.im));
      if (!(detail::complex_pow(candidate, n) == target)) {
        throw UnsupportedOnExactBackend("nth_root: component root of " + to_string(target) +
                                        " is not a Gaussian rational");
      }
      return candidate;
    };
    return BicomplexQ::from_idempotent(exact(r1, a.c1()), exact(r2, a.c2()));
  } else {
    return BicomplexD::from_idempotent(r1, r2);
  }
}

// ---------------------------------------------------------------------------
// Hyperbolic values

/// Nonnegative hyperbolic number h1 e + h2 e†.  On the exact backend moduli
/// are generally irrational, so norms are carried as squared moduli with
/// `squared == true`; comparisons square the other operand when the flags
/// differ, which is order preserving on nonnegative values.
template <Real R>
struct HyperbolicValue {
  R h1{0};
  R h2{0};
  bool squared = false;

  HyperbolicValue() = default;
  HyperbolicValue(R a, R b, bool sq = false) : h1(std::move(a)), h2(std::move(b)), squared(sq) {
    if (sign(h1) < 0 || sign(h2) < 0) throw InvalidArgument("hyperbolic value components must be nonnegative");
  }

  HyperbolicValue as_squared() const {
    if (squared) return *this;
    return HyperbolicValue(R(h1 * h1), R(h2 * h2), true);
  }

  friend bool operator==(const HyperbolicValue& a, const HyperbolicValue& b) {
    const auto x = a.as_squared();
    const auto y = b.as_squared();
    return x.h1 == y.h1 && x.h2 == y.h2;
  }

  /// Componentwise product; the result is squared iff both inputs are.
  friend HyperbolicValue operator*(const HyperbolicValue& a, const HyperbolicValue& b) {
    if (a.squared != b.squared) {
      const auto x = a.as_squared();
      const auto y = b.as_squared();
      return HyperbolicValue(R(x.h1 * y.h1), R(x.h2 * y.h2), true);
    }
    return HyperbolicValue(R(a.h1 * b.h1), R(a.h2 * b.h2), a.squared);
  }

  Bicomplex<R> to_bicomplex() const {
    return Bicomplex<R>::from_idempotent(Complex<R>(h1), Complex<R>(h2));
  }
};

using HyperbolicQ = HyperbolicValue<Rational>;
using HyperbolicD = HyperbolicValue<double>;

inline HyperbolicD to_double(const HyperbolicQ& h) {
  if (h.squared) return HyperbolicD(std::sqrt(h.h1.get_d()), std::sqrt(h.h2.get_d()));
  return HyperbolicD(h.h1.get_d(), h.h2.get_d());
}

enum class PartialOrdering { less, equal, greater, incomparable };

/// Strict hyperbolic order: a <_h b iff a.h1 < b.h1 and a.h2 < b.h2.
template <Real R>
bool hyperbolic_less(const HyperbolicValue<R>& a, const HyperbolicValue<R>& b) {
  if (a.squared != b.squared) return hyperbolic_less(a.as_squared(), b.as_squared());
  return a.h1 < b.h1 && a.h2 < b.h2;
}

template <Real R>
bool hyperbolic_less_equal(const HyperbolicValue<R>& a, const HyperbolicValue<R>& b) {
  if (a.squared != b.squared) return hyperbolic_less_equal(a.as_squared(), b.as_squared());
  return a.h1 <= b.h1 && a.h2 <= b.h2;
}

/// Three-way comparison under the componentwise partial order (<=_h).
template <Real R>
PartialOrdering compare(const HyperbolicValue<R>& a, const HyperbolicValue<R>& b) {
  const bool le = hyperbolic_less_equal(a, b);
  const bool ge = hyperbolic_less_equal(b, a);
  if (le && ge) return PartialOrdering::equal;
  if (le) return PartialOrdering::less;
  if (ge) return PartialOrdering::greater;
  return PartialOrdering::incomparable;
}

/// |z|_h = |c1| e + |c2| e†.  Exact backend: squared moduli (flag set).
template <Real R>
HyperbolicValue<R> hyperbolic_norm(const Bicomplex<R>& a) {
  if constexpr (is_exact_v<R>) {
    return HyperbolicValue<R>(a.c1().norm2(), a.c2().norm2(), true);
  } else {
    return HyperbolicValue<R>(abs(a.c1()), abs(a.c2()), false);
  }
}

/// |z|_h^2 on either backend.
template <Real R>
HyperbolicValue<R> hyperbolic_norm_squared(const Bicomplex<R>& a) {
  return HyperbolicValue<R>(a.c1().norm2(), a.c2().norm2(), true);
}

/// Membership in the open hyperbolic ball B_h(center, radius).
template <Real R>
bool ball_contains(const Bicomplex<R>& center, const HyperbolicValue<R>& radius, const Bicomplex<R>& point) {
  if (sign(radius.h1) <= 0 || sign(radius.h2) <= 0) {
    throw InvalidArgument("ball_contains: radius components must be strictly positive");
  }
  return hyperbolic_less(hyperbolic_norm_squared(point - center), radius.as_squared());
}

/// Componentwise infimum of a finite set; need not be attained by a member.
template <Real R>
HyperbolicValue<R> hyperbolic_inf(std::span<const HyperbolicValue<R>> values) {
  if (values.empty()) throw EmptySet();
  const bool mixed = std::any_of(values.begin(), values.end(),
                                 [&](const auto& v) { return v.squared != values.front().squared; });
  HyperbolicValue<R> out = mixed ? values.front().as_squared() : values.front();
  for (const auto& raw : values.subspan(1)) {
    const HyperbolicValue<R> v = mixed ? raw.as_squared() : raw;
    if (v.h1 < out.h1) out.h1 = v.h1;
    if (v.h2 < out.h2) out.h2 = v.h2;
  }
  return out;
}

template <Real R>
std::string to_string(const Bicomplex<R>& z) {
  if (z.is_complex()) return to_string(z.c1());
  return "(" + to_string(z.c1()) + ")e + (" + to_string(z.c2()) + ")e'";
}

template <Real R>
std::ostream& operator<<(std::ostream& os, const Bicomplex<R>& z) {
  return os << to_string(z);
}

}  // namespace bicx
