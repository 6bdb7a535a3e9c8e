#include "poskit/exactmat.hpp"
#include "poskit/random.hpp"

#include <gtest/gtest.h>

using namespace poskit;

namespace {

// Laplace expansion along the first row; exponential, fine up to 5x5.
Rational cofactor_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    const Rational term = m(0, j) * cofactor_det(sub);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(to_string(parse_rational("-4/6")), "-2/3");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(parse_rational(" 7 ")), "7");
  EXPECT_EQ(parse_rational("+3/9"), Rational(1, 3));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Det, SmallKnownValues) {
  EXPECT_EQ(det(RatMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(det(RatMatrix::identity(4)), 1);
  const RatMatrix pascal{{1, 1, 1}, {1, 2, 3}, {1, 3, 6}};
  EXPECT_EQ(det(pascal), 1);
}

TEST(Det, HilbertThree) {
  RatMatrix h(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
  EXPECT_EQ(det(h), Rational(1, 2160));
}

TEST(Det, VandermondeProduct) {
  const std::vector<Rational> x{Rational(1, 2), 2, -3, Rational(5, 7)};
  RatMatrix v(4, 4);
  Rational expected = 1;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < 4; ++j, p *= x[i]) v(i, j) = p;
    for (std::size_t j = i + 1; j < 4; ++j) expected *= x[j] - x[i];
  }
  EXPECT_EQ(det(v), expected);
}

TEST(Det, MatchesCofactorExpansion) {
  Sampler s(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const RatMatrix m = s.rational_matrix(n, n, -4, 4);
    EXPECT_EQ(det(m), cofactor_det(m));
  }
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(RatMatrix(2, 3)), ShapeError); }

TEST(Rank, KnownValues) {
  EXPECT_EQ(rank(RatMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}), 2u);
  EXPECT_EQ(rank(RatMatrix(3, 2)), 0u);
  EXPECT_EQ(rank(RatMatrix{{1, 2, 3}}), 1u);
}

TEST(Minor, BruteForceSubmatrix) {
  const RatMatrix m{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  EXPECT_EQ(minor(m, IndexSet({1, 3}, 3), IndexSet({2, 3}, 3)), 2 * 10 - 3 * 8);
  EXPECT_EQ(minor(m, IndexSet({2}, 3), IndexSet({1}, 3)), 4);
}

TEST(IndexSet, RejectsBadIndices) {
  EXPECT_THROW(IndexSet({0, 1}, 3), ShapeError);
  EXPECT_THROW(IndexSet({2, 2}, 3), ShapeError);
  EXPECT_THROW(IndexSet({4}, 3), ShapeError);
}

TEST(IndexSet, EnumerationIsLexicographicAndComplete) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto sets = index_sets(n, k);
      EXPECT_EQ(sets.size(), binomial(n, k));
      for (std::size_t i = 1; i < sets.size(); ++i) EXPECT_LT(sets[i - 1].indices(), sets[i].indices());
    }
  const auto two = index_sets(3, 2);
  EXPECT_EQ(two[0].indices(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(two[2].indices(), (std::vector<std::size_t>{2, 3}));
}

TEST(Compound, ShapeAndEntries) {
  Sampler s(3);
  const RatMatrix m = s.rational_matrix(4, 4, -3, 3);
  const RatMatrix c2 = compound(m, 2);
  ASSERT_EQ(c2.rows(), 6u);
  const auto sets = index_sets(4, 2);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(c2(i, j), cofactor_det(submatrix(m, sets[i], sets[j])));
  EXPECT_EQ(compound(m, 1), m);
  EXPECT_EQ(compound(m, 4)(0, 0), det(m));
}

TEST(Compound, CauchyBinetSmallSample) {
  Sampler s(5);
  for (int t = 0; t < 10; ++t) {
    const RatMatrix a = s.rational_matrix(3, 3, -5, 5), b = s.rational_matrix(3, 3, -5, 5);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(compound(a * b, k), compound(a, k) * compound(b, k));
  }
}

TEST(Kernel, DimensionAndAnnihilation) {
  Sampler s(8);
  for (int t = 0; t < 30; ++t) {
    // rank-deficient product
    const RatMatrix m = s.rational_matrix(4, 2, -3, 3) * s.rational_matrix(2, 5, -3, 3);
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size(), 5 - rank(m));
    for (const auto& v : ker) EXPECT_TRUE((m * v).is_zero());
    if (!ker.empty()) {
      EXPECT_EQ(rank(from_columns(ker, 5)), ker.size());
    }
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  const RatMatrix a{{1, 2}, {2, 4}};
  const auto x = solve(a, RatMatrix{{3}, {6}});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, (RatMatrix{{3}, {6}}));
  EXPECT_FALSE(solve(a, RatMatrix{{1}, {0}}).has_value());
}

TEST(Inverse, RoundTripAndSingular) {
  Sampler s(21);
  for (int t = 0; t < 20; ++t) {
    const RatMatrix m = s.invertible_matrix(4, -4, 4);
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(4));
  }
  EXPECT_THROW(inverse(RatMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
}

TEST(Matrix, ShapeMismatchThrows) {
  EXPECT_THROW(RatMatrix(2, 3) * RatMatrix(2, 3), ShapeError);
  EXPECT_THROW(RatMatrix(2, 3) + RatMatrix(3, 2), ShapeError);
}

TEST(Matrix, BlocksAndConcatenation) {
  const RatMatrix a{{1, 2}, {3, 4}};
  const RatMatrix b{{5}, {6}};
  const RatMatrix h = hconcat(a, b);
  EXPECT_EQ(h.block(0, 2, 2, 1), b);
  EXPECT_EQ(vconcat(a, a).rows(), 4u);
  EXPECT_EQ(trace(a), 5);
  EXPECT_EQ(transpose(a)(0, 1), 3);
}
