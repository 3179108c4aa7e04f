#include <gtest/gtest.h>

#include "bicomplex/jordan.hpp"
#include "bicomplex/polynomial.hpp"
#include "support.hpp"

namespace bicx {
namespace {

using testing::Gen;

ComplexQ cq(int re, int im = 0) { return {Rational(re), Rational(im)}; }
Polynomial poly(std::initializer_list<ComplexQ> c) { return Polynomial(std::vector<ComplexQ>(c)); }

// ---------------------------------------------------------------------------
// Characteristic polynomial

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(MatrixQ(2, 2)), Polynomial::monomial(2));
  const std::vector<ComplexQ> d{cq(1), cq(2)};
  EXPECT_EQ(char_poly(MatrixQ::diagonal(d)), poly({cq(2), cq(-3), cq(1)}));
}

// det(xI - A) by cofactor expansion over polynomial entries.
Polynomial cofactor_char_poly(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial s;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    const Polynomial term = m[0][c] * cofactor_char_poly(minor);
    s = c % 2 == 0 ? s + term : s - term;
  }
  return s;
}

TEST(CharPoly, MatchesCofactorOracle) {
  Gen g(51);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + g.index(4);
    const MatrixQ a = g.matrix_q(n, n);
    std::vector<std::vector<Polynomial>> xa(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        xa[i][j] = i == j ? poly({-a(i, j), cq(1)}) : poly({-a(i, j)});
    const auto p = char_poly(a);
    EXPECT_EQ(p, cofactor_char_poly(xa));
    EXPECT_EQ(p.degree(), static_cast<int>(n));
    EXPECT_EQ(p.leading(), cq(1));
  }
}

// ---------------------------------------------------------------------------
// Splitting

TEST(Split, Examples) {
  auto r = split_eigenvalues(poly({cq(2), cq(-3), cq(1)}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].root, cq(1));
  EXPECT_EQ(r[1].root, cq(2));
  EXPECT_EQ(r[0].multiplicity + r[1].multiplicity, 2u);

  r = split_eigenvalues(Polynomial::monomial(2));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].root, cq(0));
  EXPECT_EQ(r[0].multiplicity, 2u);

  const auto p = poly({cq(1), cq(0), cq(1)});
  r = split_eigenvalues(p);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].root, cq(0, -1));
  EXPECT_EQ(r[1].root, cq(0, 1));
  for (const auto& x : r) EXPECT_TRUE(p.evaluate(x.root).is_zero());
}

TEST(Split, RationalAndGaussianRoots) {
  // (2x - 1)(x - (1+2i))^2 (x + 3i)
  const Polynomial f = poly({cq(-1), cq(2)}) * poly({cq(-1, -2), cq(1)}) * poly({cq(-1, -2), cq(1)}) *
                       poly({cq(0, 3), cq(1)});
  const auto r = split_eigenvalues(f);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].root, cq(0, -3));
  EXPECT_EQ(r[1].root, ComplexQ(Rational(1, 2)));
  EXPECT_EQ(r[2].root, cq(1, 2));
  EXPECT_EQ(r[2].multiplicity, 2u);
}

TEST(Split, DoesNotSplitCarriesRemainder) {
  // (x - 1)(x^2 - 2)
  const Polynomial f = poly({cq(-1), cq(1)}) * poly({cq(-2), cq(0), cq(1)});
  try {
    split_eigenvalues(f);
    FAIL();
  } catch (const DoesNotSplit& e) {
    EXPECT_EQ(e.name(), "DoesNotSplit");
    EXPECT_NE(e.remaining().find("x^2"), std::string::npos);
  }
}

TEST(Split, GaussianDivisorsOfFive) {
  // 5 = (2+i)(2-i): associate classes 1, 2+i, 1+2i (= i(2-i)), 5.
  const auto d = gaussian_divisors(5, 0);
  EXPECT_EQ(d.size(), 4u);
}

TEST(Split, RandomProductsOfLinearFactors) {
  Gen g(52);
  for (int t = 0; t < 40; ++t) {
    Polynomial f = poly({cq(1)});
    std::map<std::pair<Rational, Rational>, std::size_t> expect;
    const std::size_t k = 1 + g.index(4);
    for (std::size_t i = 0; i < k; ++i) {
      const ComplexQ root = g.complex_q(4, 3);
      f = f * poly({-root, cq(1)});
      ++expect[{root.re, root.im}];
    }
    const auto r = split_eigenvalues(f);
    std::map<std::pair<Rational, Rational>, std::size_t> got;
    for (const auto& x : r) got[{x.root.re, x.root.im}] = x.multiplicity;
    EXPECT_EQ(got, expect);
  }
}

// ---------------------------------------------------------------------------
// Complex Jordan form

TEST(ComplexJordan, Examples) {
  const std::vector<ComplexQ> d{cq(3), cq(3)};
  const auto j1 = complex_jordan(MatrixQ::diagonal(d));
  EXPECT_EQ(j1.jordan, MatrixQ::diagonal(d));
  EXPECT_EQ(j1.block_sizes(0), (std::vector<std::size_t>{1, 1}));

  MatrixQ n(2, 2);
  n(0, 1) = cq(1);
  const auto j2 = complex_jordan(n);
  EXPECT_EQ(j2.block_sizes(0), (std::vector<std::size_t>{2}));
  EXPECT_EQ(j2.jordan, n);
  EXPECT_EQ(j2.transition, MatrixQ::identity(2));
}

TEST(ComplexJordan, ChainsAndInvariants) {
  Gen g(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + g.index(5);
    const auto blocks = testing::random_jordan_blocks(g, n);
    const MatrixQ a = testing::conjugate_by_random(g, jordan_matrix(blocks, n));
    const auto jd = complex_jordan(a);
    EXPECT_EQ(a * jd.transition, jd.transition * jd.jordan);
    EXPECT_EQ(testing::block_multiset(jd.blocks), testing::block_multiset(blocks));
    std::size_t total = 0;
    for (const auto& b : jd.blocks) {
      total += b.size;
      const MatrixQ shifted = a - scalar_identity(n, b.eigenvalue);
      EXPECT_TRUE(is_zero_vector(shifted * b.chain[0]));
      for (std::size_t k = 1; k < b.size; ++k) EXPECT_EQ(shifted * b.chain[k], b.chain[k - 1]);
    }
    EXPECT_EQ(total, n);
  }
}

TEST(ComplexJordan, RankSequenceConsistency) {
  Gen g(54);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + g.index(4);
    const MatrixQ a = testing::conjugate_by_random(g, jordan_matrix(testing::random_jordan_blocks(g, n), n));
    const auto jd = complex_jordan(a);
    for (std::size_t e = 0; e < jd.eigenvalues.size(); ++e) {
      const MatrixQ sa = a - scalar_identity(n, jd.eigenvalues[e]);
      const MatrixQ sj = jd.jordan - scalar_identity(n, jd.eigenvalues[e]);
      MatrixQ pa = MatrixQ::identity(n), pj = MatrixQ::identity(n);
      for (std::size_t k = 1; k <= n; ++k) {
        pa = pa * sa;
        pj = pj * sj;
        EXPECT_EQ(rank(pa), rank(pj));
      }
    }
  }
}

TEST(ComplexJordan, SimilarityInvariance) {
  Gen g(55);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + g.index(3);
    const MatrixQ a = testing::conjugate_by_random(g, jordan_matrix(testing::random_jordan_blocks(g, n), n));
    const MatrixQ b = testing::conjugate_by_random(g, a);
    const auto ja = complex_jordan(a), jb = complex_jordan(b);
    EXPECT_EQ(ja.eigenvalues, jb.eigenvalues);
    EXPECT_EQ(ja.jordan, jb.jordan);
  }
}

TEST(ComplexJordan, NonSplittingThrows) {
  MatrixQ m(2, 2);
  m(0, 1) = cq(1);
  m(1, 0) = cq(3);
  EXPECT_THROW(complex_jordan(m), DoesNotSplit);
}

// ---------------------------------------------------------------------------
// Bicomplex Jordan form

BicomplexMatrixQ example2() {
  MatrixQ n(2, 2);
  n(0, 1) = cq(1);
  return BicomplexMatrixQ(MatrixQ(2, 2), n);
}

TEST(BicomplexJordan, ExampleTwoIsAlreadyInJordanForm) {
  const auto a = example2();
  const auto jd = bicomplex_jordan(a);
  EXPECT_EQ(jd.j, a);
  const auto alphabet = jd.superdiagonal_alphabet();
  EXPECT_EQ(alphabet, (std::set<SuperdiagonalSymbol>{SuperdiagonalSymbol::e_dagger}));
}

TEST(BicomplexJordan, ComplexEmbeddingReducesToClassicalForm) {
  Gen g(56);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + g.index(3);
    const MatrixQ a = testing::conjugate_by_random(g, jordan_matrix(testing::random_jordan_blocks(g, n), n));
    const auto jd = bicomplex_jordan(BicomplexMatrixQ(a));
    EXPECT_EQ(jd.j.m1(), jd.j.m2());
    EXPECT_EQ(jd.j.m1(), complex_jordan(a).jordan);
    for (auto s : jd.superdiagonal_alphabet())
      EXPECT_TRUE(s == SuperdiagonalSymbol::zero || s == SuperdiagonalSymbol::one);
  }
}

TEST(BicomplexJordan, ReconstructionAndAlphabet) {
  Gen g(57);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + g.index(5);
    const BicomplexMatrixQ a(
        testing::conjugate_by_random(g, jordan_matrix(testing::random_jordan_blocks(g, n), n)),
        testing::conjugate_by_random(g, jordan_matrix(testing::random_jordan_blocks(g, n), n)));
    const auto jd = bicomplex_jordan(a);
    EXPECT_EQ(jd.p * jd.j * inverse(jd.p), a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != i + 1) EXPECT_TRUE(jd.j.at(i, k).is_zero());
    const bool diagonal = jd.comp1.is_diagonal() && jd.comp2.is_diagonal();
    const auto alphabet = jd.superdiagonal_alphabet();
    const bool only_zero = alphabet.empty() || alphabet == std::set<SuperdiagonalSymbol>{SuperdiagonalSymbol::zero};
    EXPECT_EQ(diagonal, only_zero);
  }
}

TEST(BicomplexJordan, ErrorsAreTaggedWithComponent) {
  MatrixQ m(2, 2);
  m(0, 1) = cq(1);
  m(1, 0) = cq(2);
  try {
    bicomplex_jordan(BicomplexMatrixQ(MatrixQ::identity(2), m));
    FAIL();
  } catch (const DoesNotSplit& e) {
    EXPECT_EQ(e.fields().back(), (Error::Field{"component", "2"}));
  }
}

TEST(BicomplexJordan, BlockOrderEnumerationGivesValidForms) {
  const std::vector<ComplexQ> d1{cq(1), cq(2), cq(3)};
  MatrixQ m2(3, 3);
  m2(0, 1) = cq(1);
  const BicomplexMatrixQ a(MatrixQ::diagonal(d1), m2);
  const auto jd = bicomplex_jordan(a);
  const auto variants = enumerate_block_orders(jd);
  // 3! orders of three distinct 1x1 blocks times 2 orders of blocks {2, 1}.
  EXPECT_EQ(variants.size(), 12u);
  EXPECT_EQ(variants.front().j, jd.j);
  for (const auto& v : variants) EXPECT_EQ(v.p * v.j * inverse(v.p), a);
  EXPECT_EQ(enumerate_block_orders(jd, 5).size(), 5u);
}

}  // namespace
}  // namespace bicx
