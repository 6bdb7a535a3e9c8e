#include "poskit/liealg.hpp"
#include "poskit/random.hpp"
#include "poskit/symplectic.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace poskit;

namespace {

RatMatrix random_element(Sampler& s, const LieAlgebra& g) {
  RatMatrix c(g.dim(), 1);
  for (std::size_t i = 0; i < g.dim(); ++i) c(i, 0) = s.rational(-3, 3, 4);
  return g.combine(c);
}

Rational trace_of_product(const RatMatrix& x, const RatMatrix& y) { return trace(x * y); }

std::map<RootCoeffs, std::size_t> root_table(const RootDecomposition& rd) {
  std::map<RootCoeffs, std::size_t> out;
  for (const auto& r : rd.roots) out[r.coeffs] = r.multiplicity;
  return out;
}

const std::vector<LieAlgebraSpec>& small_specs() {
  static const std::vector<LieAlgebraSpec> specs{
      LieAlgebraSpec::so(2, 3), LieAlgebraSpec::so(2, 4), LieAlgebraSpec::so(3, 3), LieAlgebraSpec::so(1, 4),
      LieAlgebraSpec::sl(2),    LieAlgebraSpec::sl(3),    LieAlgebraSpec::sl(4),    LieAlgebraSpec::sl(5),
      LieAlgebraSpec::sp(1),    LieAlgebraSpec::sp(2),    LieAlgebraSpec::sp(3)};
  return specs;
}

}  // namespace

TEST(LieAlgebraSpec, ParameterRanges) {
  EXPECT_THROW(LieAlgebraSpec::so(0, 3), DomainError);
  EXPECT_THROW(LieAlgebraSpec::so(3, 2), DomainError);
  EXPECT_THROW(LieAlgebraSpec::so(1, 1), DomainError);
  EXPECT_THROW(LieAlgebraSpec::sl(1), DomainError);
  EXPECT_THROW(LieAlgebraSpec::sp(0), DomainError);
}

TEST(FormQ, TwoThree) {
  const RatMatrix q = form_Q(2, 3);
  EXPECT_EQ(q(0, 4), -1);
  EXPECT_EQ(q(1, 3), 1);
  EXPECT_EQ(q(2, 2), -1);
  EXPECT_TRUE(is_symmetric(q));
  EXPECT_EQ(signature(q), (Signature{2, 3, 0}));
}

TEST(Membership, Examples) {
  EXPECT_TRUE(membership(diagonal<Rational>({1, 0, -1}), LieAlgebraSpec::sl(3)));
  EXPECT_FALSE(membership(diagonal<Rational>({1, 0, 0}), LieAlgebraSpec::sl(3)));
  EXPECT_TRUE(membership(elementary(2, 0, 1), LieAlgebraSpec::sp(1)));
  const auto b = so23_basis();
  Sampler s(1);
  for (int t = 0; t < 10; ++t) {
    RatMatrix x(5, 5);
    for (const auto* g : {&b.e1, &b.e2, &b.e3, &b.e4, &b.f1, &b.f2, &b.f3, &b.f4, &b.h1, &b.h2}) x += *g * s.rational(-3, 3);
    EXPECT_TRUE(membership(x, LieAlgebraSpec::so(2, 3)));
  }
  EXPECT_FALSE(membership(elementary(5, 0, 1), LieAlgebraSpec::so(2, 3)));
}

TEST(Dim, FormulasAndBasisSize) {
  EXPECT_EQ(dim(LieAlgebraSpec::so(2, 3)), 10u);
  EXPECT_EQ(dim(LieAlgebraSpec::sl(3)), 8u);
  EXPECT_EQ(dim(LieAlgebraSpec::sp(2)), 10u);
  for (const auto& spec : small_specs()) {
    const auto basis = lie_basis(spec);
    EXPECT_EQ(basis.size(), dim(spec)) << spec.name();
    std::vector<RatMatrix> cols;
    for (const auto& x : basis) {
      EXPECT_TRUE(membership(x, spec));
      cols.push_back(vectorize(x));
    }
    EXPECT_EQ(rank(from_columns(cols, spec.matrix_size() * spec.matrix_size())), basis.size()) << spec.name();
  }
}

TEST(LieAlgebra, ClosedUnderBracket) {
  Sampler s(2);
  for (const auto& spec : {LieAlgebraSpec::sl(3), LieAlgebraSpec::sp(2), LieAlgebraSpec::so(2, 3)}) {
    const LieAlgebra g(spec);
    for (int t = 0; t < 10; ++t) {
      const RatMatrix x = random_element(s, g), y = random_element(s, g);
      EXPECT_TRUE(g.contains(bracket(x, y)));
      EXPECT_EQ(g.combine(g.coordinates(x)), x);
    }
  }
}

TEST(Killing, ClosedFormsAgainstAdTrace) {
  Sampler s(3);
  for (const auto& spec : {LieAlgebraSpec::sl(2), LieAlgebraSpec::sl(3), LieAlgebraSpec::sl(4), LieAlgebraSpec::sp(1),
                           LieAlgebraSpec::sp(2), LieAlgebraSpec::so(1, 2), LieAlgebraSpec::so(2, 3),
                           LieAlgebraSpec::so(2, 4)}) {
    const LieAlgebra g(spec);
    for (int t = 0; t < 8; ++t) {
      const RatMatrix x = random_element(s, g), y = random_element(s, g);
      EXPECT_EQ(killing(x, y, spec), killing_via_ad(x, y, g)) << spec.name();
      EXPECT_EQ(killing(x, y, spec), killing(y, x, spec));
    }
  }
}

TEST(Killing, FamilyConstants) {
  Sampler s(4);
  const LieAlgebra so23(LieAlgebraSpec::so(2, 3));
  const RatMatrix x = random_element(s, so23);
  EXPECT_EQ(killing(x, x, LieAlgebraSpec::so(2, 3)), 3 * trace_of_product(x, x));
  const LieAlgebra sp4(LieAlgebraSpec::sp(2));
  const RatMatrix y = random_element(s, sp4);
  EXPECT_EQ(killing(y, y, LieAlgebraSpec::sp(2)), 6 * trace_of_product(y, y));
  const LieAlgebra sl3(LieAlgebraSpec::sl(3));
  const RatMatrix z = random_element(s, sl3);
  EXPECT_EQ(killing(z, z, LieAlgebraSpec::sl(3)), 6 * trace_of_product(z, z));
}

TEST(Killing, CompactDirectionIsNegative) {
  const RatMatrix x = elementary(3, 0, 1) - elementary(3, 1, 0);
  EXPECT_LT(killing_via_ad(x, x, LieAlgebraSpec::sl(3)), 0);
}

TEST(Killing, Sl3GramMatrix) {
  const RatMatrix gram = killing_gram(sl3_exercise_basis(), LieAlgebraSpec::sl(3));
  RatMatrix expected(8, 8);
  for (std::size_t i = 0; i < 3; ++i) expected(i, i) = -12;
  for (std::size_t i = 3; i < 8; ++i) expected(i, i) = 12;
  expected(6, 7) = expected(7, 6) = 6;
  EXPECT_EQ(gram, expected);
  EXPECT_EQ(signature(gram), (Signature{5, 3, 0}));
}

TEST(Cartan, InvolutionAndSplit) {
  Sampler s(5);
  for (const auto& spec : {LieAlgebraSpec::sl(3), LieAlgebraSpec::sp(2), LieAlgebraSpec::so(2, 3)}) {
    const LieAlgebra g(spec);
    for (int t = 0; t < 8; ++t) {
      const RatMatrix x = random_element(s, g), y = random_element(s, g);
      EXPECT_EQ(cartan_involution(cartan_involution(x)), x);
      if (!x.is_zero()) {
        EXPECT_LT(killing(x, cartan_involution(x), spec), 0);
      }
      const auto px = cartan_split(x, spec), py = cartan_split(y, spec);
      EXPECT_EQ(px.compact + px.noncompact, x);
      EXPECT_TRUE(g.contains(px.compact));
      EXPECT_TRUE(g.contains(px.noncompact));
      EXPECT_EQ(px.compact.transpose(), px.compact * Rational(-1));
      EXPECT_EQ(px.noncompact.transpose(), px.noncompact);
      // [k,k] in k, [p,p] in k, [k,p] in p
      EXPECT_EQ(cartan_split(bracket(px.compact, py.compact), spec).noncompact.is_zero(), true);
      EXPECT_EQ(cartan_split(bracket(px.noncompact, py.noncompact), spec).noncompact.is_zero(), true);
      EXPECT_EQ(cartan_split(bracket(px.compact, py.noncompact), spec).compact.is_zero(), true);
    }
  }
}

TEST(Cartan, KillingDefiniteOnEachPart) {
  for (const auto& spec : {LieAlgebraSpec::sl(3), LieAlgebraSpec::so(2, 3)}) {
    std::vector<RatMatrix> k, p;
    for (const auto& x : lie_basis(spec)) {
      const auto parts = cartan_split(x, spec);
      if (!parts.compact.is_zero()) k.push_back(parts.compact);
      if (!parts.noncompact.is_zero()) p.push_back(parts.noncompact);
    }
    // drop dependent vectors so the Gram matrices are nondegenerate
    auto independent = [&](const std::vector<RatMatrix>& v) {
      std::vector<RatMatrix> out, cols;
      for (const auto& x : v) {
        cols.push_back(vectorize(x));
        if (rank(from_columns(cols, spec.matrix_size() * spec.matrix_size())) == cols.size()) out.push_back(x);
        else cols.pop_back();
      }
      return out;
    };
    const auto kb = independent(k), pb = independent(p);
    EXPECT_EQ(signature(killing_gram(kb, spec)).negative, kb.size());
    EXPECT_EQ(signature(killing_gram(pb, spec)).positive, pb.size());
  }
}

TEST(MaximalAbelian, RanksAndCommutation) {
  EXPECT_EQ(maximal_abelian(LieAlgebraSpec::so(2, 4)).size(), 2u);
  EXPECT_EQ(maximal_abelian(LieAlgebraSpec::sl(4)).size(), 3u);
  EXPECT_EQ(maximal_abelian(LieAlgebraSpec::sp(3)).size(), 3u);
  for (const auto& spec : small_specs()) {
    const auto a = maximal_abelian(spec);
    for (const auto& x : a) {
      EXPECT_TRUE(membership(x, spec));
      for (const auto& y : a) EXPECT_TRUE(bracket(x, y).is_zero());
    }
  }
}

TEST(RestrictedRoots, So23AllMultiplicityOne) {
  const auto rd = restricted_roots(LieAlgebraSpec::so(2, 3));
  const std::map<RootCoeffs, std::size_t> expected{{{1, 0}, 1},  {{-1, 0}, 1}, {{0, 1}, 1},   {{0, -1}, 1},
                                                   {{1, 1}, 1},  {{1, -1}, 1}, {{-1, 1}, 1},  {{-1, -1}, 1}};
  EXPECT_EQ(root_table(rd), expected);
  EXPECT_TRUE(rd.zero_space_basis.empty());
  EXPECT_EQ(rd.dynkin, "B2");
}

TEST(RestrictedRoots, So24ShortRootsDoubled) {
  const auto rd = restricted_roots(LieAlgebraSpec::so(2, 4));
  EXPECT_EQ(rd.multiplicity({1, 0}), 2u);
  EXPECT_EQ(rd.multiplicity({0, -1}), 2u);
  EXPECT_EQ(rd.multiplicity({1, 1}), 1u);
  EXPECT_EQ(rd.zero_space_basis.size(), 1u);
  EXPECT_FALSE(is_split(rd));
}

TEST(RestrictedRoots, So14) {
  const auto rd = restricted_roots(LieAlgebraSpec::so(1, 4));
  EXPECT_EQ(rd.multiplicity({1}), 3u);
  EXPECT_EQ(rd.zero_space_basis.size(), 3u);
}

TEST(RestrictedRoots, Sl3) {
  const auto rd = restricted_roots(LieAlgebraSpec::sl(3));
  EXPECT_EQ(rd.roots.size(), 6u);
  for (const auto& r : rd.roots) {
    EXPECT_EQ(r.multiplicity, 1u);
    long sum = 0;
    for (auto c : r.coeffs) sum += c;
    EXPECT_EQ(sum, 0);
  }
  EXPECT_TRUE(rd.zero_space_basis.empty());
  EXPECT_EQ(rd.dynkin, "A2");
}

TEST(RestrictedRoots, DimensionAuditAndEigenEquations) {
  for (const auto& spec : small_specs()) {
    const auto rd = restricted_roots(spec);
    EXPECT_EQ(rd.dimension_total(), dim(spec)) << spec.name();
    EXPECT_EQ(rd.a_basis.size(), spec.real_rank());
    for (const auto& r : rd.roots) {
      EXPECT_EQ(r.multiplicity, r.space_basis.size());
      const auto vals = rd.evaluate(r.coeffs);
      for (const auto& x : r.space_basis)
        for (std::size_t k = 0; k < rd.a_basis.size(); ++k) EXPECT_EQ(bracket(rd.a_basis[k], x), x * vals[k]);
    }
    for (const auto& z : rd.zero_space_basis)
      for (const auto& a : rd.a_basis) EXPECT_TRUE(bracket(a, z).is_zero());
  }
}

TEST(RestrictedRoots, PositiveRootsExpandNonnegatively) {
  for (const auto& spec : small_specs()) {
    const auto rd = restricted_roots(spec);
    for (const auto& r : rd.positive_roots()) {
      for (const auto& c : rd.simple_expansion(r.coeffs)) {
        EXPECT_GE(c, 0) << spec.name();
        EXPECT_EQ(denominator(c), 1);
      }
    }
    EXPECT_EQ(rd.positive_roots().size() * 2, rd.roots.size());
  }
}

TEST(Dynkin, FamilyLabels) {
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::so(2, 3)), "B2");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::so(2, 4)), "B2");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::so(3, 3)), "D3");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::so(3, 4)), "B3");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::sl(4)), "A3");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::sp(2)), "C2");
  EXPECT_EQ(dynkin_type(LieAlgebraSpec::sp(3)), "C3");
}

TEST(Dynkin, CartanMatrixClassification) {
  EXPECT_EQ(classify_cartan({{2, -1}, {-1, 2}}), "A2");
  EXPECT_EQ(classify_cartan({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}), "C3");
  EXPECT_EQ(classify_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}), "B3");
  EXPECT_EQ(classify_cartan({{2}}), "A1");
  EXPECT_EQ(classify_cartan({{2, 0}, {0, 2}}), "A1xA1");
}

TEST(Splitness, Criterion) {
  EXPECT_TRUE(is_split(LieAlgebraSpec::so(2, 3)));
  EXPECT_TRUE(is_split(LieAlgebraSpec::so(3, 3)));
  EXPECT_FALSE(is_split(LieAlgebraSpec::so(2, 4)));
  EXPECT_FALSE(is_split(LieAlgebraSpec::so(1, 4)));
  for (std::size_t n = 2; n <= 4; ++n) EXPECT_TRUE(is_split(LieAlgebraSpec::sl(n)));
  EXPECT_TRUE(is_split(LieAlgebraSpec::sp(2)));
}

TEST(CartanInteger, B2Values) {
  const auto rd = restricted_roots(LieAlgebraSpec::so(2, 3));
  const RootCoeffs a1{1, -1}, a2{0, 1};
  EXPECT_EQ(cartan_integer(a1, a1, rd), 2);
  EXPECT_EQ(cartan_integer(a1, a2, rd), -1);
  EXPECT_EQ(cartan_integer(a2, a1, rd), -2);
  EXPECT_EQ(cartan_integer(RootCoeffs{1, 0}, RootCoeffs{0, 1}, rd), 0);
}
