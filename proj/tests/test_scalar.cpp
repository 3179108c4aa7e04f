#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "bicomplex/scalar.hpp"
#include "support.hpp"

namespace bicx {
namespace {

using testing::Gen;

ComplexQ cq(int re, int im = 0) { return {Rational(re), Rational(im)}; }
BicomplexQ idem(const ComplexQ& a, const ComplexQ& b) { return BicomplexQ::from_idempotent(a, b); }

TEST(Units, IdempotentIdentities) {
  const auto e = BicomplexQ::e();
  const auto ed = BicomplexQ::e_dagger();
  EXPECT_EQ(e * ed, BicomplexQ::zero());
  EXPECT_EQ(ed * e, BicomplexQ::zero());
  EXPECT_EQ(e * e, e);
  EXPECT_EQ(ed * ed, ed);
  EXPECT_EQ(e + ed, BicomplexQ::one());
}

TEST(Units, EuclideanFormOfE) {
  // e = (1 + ij)/2, i.e. z1 = 1/2, z2 = i/2.
  const auto [z1, z2] = BicomplexQ::e().to_euclidean();
  EXPECT_EQ(z1, ComplexQ(Rational(1, 2)));
  EXPECT_EQ(z2, ComplexQ(Rational(0), Rational(1, 2)));
}

// Euclidean product (z1 w1 - z2 w2) + j (z1 w2 + w1 z2), evaluated directly.
std::pair<ComplexQ, ComplexQ> euclidean_product(const ComplexQ& z1, const ComplexQ& z2, const ComplexQ& w1,
                                                const ComplexQ& w2) {
  return {z1 * w1 - z2 * w2, z1 * w2 + w1 * z2};
}

TEST(Product, MatchesEuclideanFormula) {
  const auto z = BicomplexQ::from_euclidean(cq(1), cq(0, 1));
  const auto w = BicomplexQ::from_euclidean(cq(1), cq(0, -1));
  const auto [p1, p2] = euclidean_product(cq(1), cq(0, 1), cq(1), cq(0, -1));
  EXPECT_EQ(z * w, BicomplexQ::from_euclidean(p1, p2));

  Gen g(11);
  for (int t = 0; t < 300; ++t) {
    const ComplexQ z1 = g.complex_q(), z2 = g.complex_q(), w1 = g.complex_q(), w2 = g.complex_q();
    const auto [q1, q2] = euclidean_product(z1, z2, w1, w2);
    EXPECT_EQ(BicomplexQ::from_euclidean(z1, z2) * BicomplexQ::from_euclidean(w1, w2),
              BicomplexQ::from_euclidean(q1, q2));
  }
}

TEST(Product, RingLaws) {
  Gen g(12);
  for (int t = 0; t < 500; ++t) {
    const auto a = g.scalar_q(), b = g.scalar_q(), c = g.scalar_q();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, BicomplexQ::zero());
    EXPECT_EQ(a * BicomplexQ::one(), a);
  }
}

TEST(Coordinates, RoundTripIsExact) {
  Gen g(13);
  for (int t = 0; t < 500; ++t) {
    const ComplexQ z1 = g.complex_q(), z2 = g.complex_q();
    const auto [r1, r2] = BicomplexQ::from_euclidean(z1, z2).to_euclidean();
    EXPECT_EQ(r1, z1);
    EXPECT_EQ(r2, z2);
  }
}

TEST(Coordinates, ComplexIffComponentsAgree) {
  EXPECT_TRUE(BicomplexQ(cq(3, -2)).is_complex());
  EXPECT_TRUE(BicomplexQ::from_euclidean(cq(3, -2), cq(0)).is_complex());
  EXPECT_FALSE(BicomplexQ::from_euclidean(cq(3), cq(1)).is_complex());
  EXPECT_FALSE(BicomplexQ::e().is_complex());
}

TEST(Invert, Basics) {
  EXPECT_EQ(invert(BicomplexQ::one()), BicomplexQ::one());
  EXPECT_EQ(invert(idem(cq(2), cq(4))), idem(ComplexQ(Rational(1, 2)), ComplexQ(Rational(1, 4))));
}

TEST(Invert, NotInvertibleNamesTheComponent) {
  try {
    invert(BicomplexQ::e());
    FAIL() << "expected NotInvertible";
  } catch (const NotInvertible& err) {
    EXPECT_EQ(err.which(), Component::second);
    EXPECT_EQ(err.name(), "NotInvertible");
  }
  try {
    invert(BicomplexQ::e_dagger());
    FAIL();
  } catch (const NotInvertible& err) {
    EXPECT_EQ(err.which(), Component::first);
  }
  try {
    invert(BicomplexQ::zero());
    FAIL();
  } catch (const NotInvertible& err) {
    EXPECT_EQ(err.which(), Component::both);
  }
}

TEST(Invert, FailsExactlyOnZeroDivisors) {
  Gen g(14);
  for (int t = 0; t < 500; ++t) {
    auto a = g.scalar_q(2, 1);  // small range so zero components are common
    const bool expect_ok = !a.c1().is_zero() && !a.c2().is_zero();
    EXPECT_EQ(a.is_invertible(), expect_ok);
    if (expect_ok) {
      EXPECT_EQ(a * invert(a), BicomplexQ::one());
    } else {
      EXPECT_THROW(invert(a), NotInvertible);
    }
  }
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(BicomplexQ::e()), BicomplexQ::e());
  EXPECT_EQ(conjugate(BicomplexQ(5)), BicomplexQ(5));
  Gen g(15);
  for (int t = 0; t < 200; ++t) {
    const ComplexQ z1 = g.complex_q(), z2 = g.complex_q();
    EXPECT_EQ(conjugate(BicomplexQ::from_euclidean(z1, z2)), BicomplexQ::from_euclidean(z1.conj(), -z2.conj()));
  }
}

TEST(Conjugate, RingInvolution) {
  Gen g(16);
  for (int t = 0; t < 300; ++t) {
    const auto a = g.scalar_q(), b = g.scalar_q();
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_EQ(conjugate(a * b), conjugate(a) * conjugate(b));
    EXPECT_EQ(conjugate(a + b), conjugate(a) + conjugate(b));
    const auto n = a * conjugate(a);
    EXPECT_TRUE(n.is_hyperbolic());
    EXPECT_EQ(n.c1().re, a.c1().norm2());
    EXPECT_EQ(n.c2().re, a.c2().norm2());
  }
}

TEST(NthRoot, Examples) {
  const auto one = nth_root(BicomplexD::one(), 2, 0, 0);
  EXPECT_TRUE(approx_equal(one, BicomplexD::one()));
  const auto r = nth_root(BicomplexD::from_idempotent(ComplexD(4.0), ComplexD(9.0)), 2, 0, 0);
  EXPECT_TRUE(approx_equal(r, BicomplexD::from_idempotent(ComplexD(2.0), ComplexD(3.0))));
  const auto s = nth_root(BicomplexD::from_idempotent(ComplexD(-1.0), ComplexD(-1.0)), 2, 0, 1);
  EXPECT_TRUE(approx_equal(s, BicomplexD::from_idempotent(ComplexD(0.0, 1.0), ComplexD(0.0, -1.0)), {1e-15, 1e-12}));
}

TEST(NthRoot, AllBranchesReturnTheInput) {
  Gen g(17);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto a = g.scalar_d(3.0);
    std::vector<BicomplexD> roots;
    for (unsigned k1 = 0; k1 < n; ++k1)
      for (unsigned k2 = 0; k2 < n; ++k2) {
        const auto r = nth_root(a, n, k1, k2);
        BicomplexD p = BicomplexD::one();
        for (unsigned i = 0; i < n; ++i) p = p * r;
        EXPECT_TRUE(approx_equal(p, a, {1e-12, 1e-10}));
        roots.push_back(r);
      }
    // n^2 distinct bicomplex roots.
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_FALSE(approx_equal(roots[i], roots[j]));
  }
}

TEST(NthRoot, ExactBackend) {
  EXPECT_EQ(nth_root(idem(cq(4), cq(-9)), 2, 0, 0), idem(cq(2), cq(0, 3)));
  EXPECT_THROW(nth_root(idem(cq(2), cq(1)), 2, 0, 0), UnsupportedOnExactBackend);
  EXPECT_THROW(nth_root(BicomplexD::one(), 2, 2, 0), InvalidArgument);
}

TEST(HyperbolicNorm, Examples) {
  EXPECT_EQ(hyperbolic_norm(BicomplexQ::zero()), HyperbolicQ(0, 0));
  EXPECT_EQ(hyperbolic_norm(BicomplexQ::e()), HyperbolicQ(1, 0));
  const auto n = hyperbolic_norm(BicomplexD::from_idempotent(ComplexD(3.0, 4.0), ComplexD(0.0, -2.0)));
  EXPECT_DOUBLE_EQ(n.h1, 5.0);
  EXPECT_DOUBLE_EQ(n.h2, 2.0);
  EXPECT_FALSE(n.squared);
  EXPECT_TRUE(hyperbolic_norm(BicomplexQ::e()).squared);
}

TEST(HyperbolicNorm, MultiplicativeOnThousandExactScalars) {
  Gen g(18);
  for (int t = 0; t < 1000; ++t) {
    const auto a = g.scalar_q(), b = g.scalar_q();
    const auto lhs = hyperbolic_norm(a * b);
    const auto rhs = hyperbolic_norm(a) * hyperbolic_norm(b);
    ASSERT_TRUE(lhs.squared && rhs.squared);
    ASSERT_EQ(lhs.h1, rhs.h1);
    ASSERT_EQ(lhs.h2, rhs.h2);
  }
}

TEST(HyperbolicValue, RejectsNegativeComponents) {
  EXPECT_THROW(HyperbolicD(-1.0, 0.0), InvalidArgument);
  EXPECT_THROW(HyperbolicQ(0, -1), InvalidArgument);
}

TEST(HyperbolicOrder, PartialOrderSanity) {
  const HyperbolicQ a(1, 0), b(0, 1), c(2, 2), d(3, 3);
  EXPECT_EQ(compare(a, b), PartialOrdering::incomparable);
  EXPECT_FALSE(hyperbolic_less(c, c));
  EXPECT_TRUE(hyperbolic_less(a, c));
  EXPECT_TRUE(hyperbolic_less(c, d));
  EXPECT_TRUE(hyperbolic_less(a, d));
  EXPECT_EQ(compare(c, d), PartialOrdering::less);
  EXPECT_EQ(compare(d, c), PartialOrdering::greater);
  EXPECT_EQ(compare(c, c), PartialOrdering::equal);
  // (1, 2) <=_h (1, 3) holds but strict <_h does not.
  EXPECT_TRUE(hyperbolic_less_equal(HyperbolicQ(1, 2), HyperbolicQ(1, 3)));
  EXPECT_FALSE(hyperbolic_less(HyperbolicQ(1, 2), HyperbolicQ(1, 3)));
}

TEST(HyperbolicOrder, TransitiveAndIrreflexiveOnSamples) {
  Gen g(19);
  std::vector<HyperbolicQ> vs;
  for (int t = 0; t < 40; ++t) vs.emplace_back(Rational(g.integer(0, 4)), Rational(g.integer(0, 4)));
  for (const auto& a : vs) {
    EXPECT_FALSE(hyperbolic_less(a, a));
    for (const auto& b : vs)
      for (const auto& c : vs)
        if (hyperbolic_less(a, b) && hyperbolic_less(b, c)) EXPECT_TRUE(hyperbolic_less(a, c));
  }
}

TEST(HyperbolicOrder, SquaredFlagComparesConsistently) {
  // (2, 3) as moduli versus (4, 9) as squares: equal.
  EXPECT_EQ(HyperbolicQ(2, 3), HyperbolicQ(4, 9, true));
  EXPECT_TRUE(hyperbolic_less(HyperbolicQ(2, 3, true), HyperbolicQ(2, 3)));
}

TEST(Ball, Examples) {
  EXPECT_TRUE(ball_contains(BicomplexQ::zero(), HyperbolicQ(1, 1), BicomplexQ::zero()));
  EXPECT_FALSE(ball_contains(BicomplexQ::zero(), HyperbolicQ(1, 1), BicomplexQ::e()));
  EXPECT_TRUE(ball_contains(BicomplexD::zero(), HyperbolicD(2.0, 1.0),
                            BicomplexD::from_idempotent(ComplexD(1.0), ComplexD(0.5))));
  EXPECT_THROW(ball_contains(BicomplexQ::zero(), HyperbolicQ(1, 0), BicomplexQ::zero()), InvalidArgument);
}

TEST(Ball, ExactAgreesWithComponentwiseTest) {
  Gen g(20);
  for (int t = 0; t < 300; ++t) {
    const auto c = g.scalar_q(3), p = g.scalar_q(3);
    const HyperbolicQ r(Rational(g.integer(1, 5)), Rational(g.integer(1, 5)));
    const ComplexQ d1 = p.c1() - c.c1(), d2 = p.c2() - c.c2();
    const bool expect = d1.norm2() < r.h1 * r.h1 && d2.norm2() < r.h2 * r.h2;
    EXPECT_EQ(ball_contains(c, r, p), expect);
  }
}

TEST(Infimum, Examples) {
  const std::vector<HyperbolicQ> one{HyperbolicQ(1, 2)};
  EXPECT_EQ(hyperbolic_inf(std::span<const HyperbolicQ>(one)), HyperbolicQ(1, 2));
  const std::vector<HyperbolicQ> two{HyperbolicQ(1, 5), HyperbolicQ(3, 2)};
  EXPECT_EQ(hyperbolic_inf(std::span<const HyperbolicQ>(two)), HyperbolicQ(1, 2));
  const std::vector<HyperbolicQ> none;
  EXPECT_THROW(hyperbolic_inf(std::span<const HyperbolicQ>(none)), EmptySet);
}

TEST(Infimum, BruteForceOverSamples) {
  Gen g(21);
  for (int t = 0; t < 50; ++t) {
    std::vector<HyperbolicQ> vs;
    Rational lo1 = 100, lo2 = 100;
    for (int k = 0; k < 7; ++k) {
      const Rational x = g.rational(9, 5), y = g.rational(9, 5);
      const Rational a = x * x, b = y * y;
      vs.emplace_back(a, b);
      lo1 = std::min(lo1, a);
      lo2 = std::min(lo2, b);
    }
    EXPECT_EQ(hyperbolic_inf(std::span<const HyperbolicQ>(vs)), HyperbolicQ(lo1, lo2));
  }
}

TEST(Formatting, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("1e-2"), Rational(1, 100));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("x"), InvalidArgument);
}

}  // namespace
}  // namespace bicx
