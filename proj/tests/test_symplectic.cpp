#include "poskit/samples.hpp"
#include "poskit/symplectic.hpp"

#include <gtest/gtest.h>

using namespace poskit;

namespace {

Lagrangian line(const Rational& a, const Rational& b) { return Lagrangian(RatMatrix{{a}, {b}}); }

// Brute-force signature: count sign changes of the leading principal minor
// sequence after a random congruence that makes all of them nonzero.
Signature signature_by_minors(const RatMatrix& q, Sampler& s) {
  const std::size_t n = q.rows();
  const std::size_t r = rank(q);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const RatMatrix p = s.invertible_matrix(n, -3, 3);
    const RatMatrix m = p.transpose() * q * p;
    std::vector<Rational> d{1};
    bool ok = true;
    for (std::size_t k = 1; k <= r && ok; ++k) {
      d.push_back(det(m.block(0, 0, k, k)));
      ok = d.back() != 0;
    }
    if (!ok) continue;
    std::size_t neg = 0;
    for (std::size_t k = 1; k <= r; ++k)
      if ((d[k] > 0) != (d[k - 1] > 0)) ++neg;
    return {r - neg, neg, n - r};
  }
  ADD_FAILURE() << "no generic congruence found";
  return {};
}

std::vector<Lagrangian> transverse_triple(Sampler& s, std::size_t n) {
  while (true) {
    std::vector<Lagrangian> l{random_lagrangian(s, n), random_lagrangian(s, n), random_lagrangian(s, n)};
    if (intersects_trivially(l[0], l[1]) && intersects_trivially(l[1], l[2]) && intersects_trivially(l[0], l[2]))
      return l;
  }
}

}  // namespace

TEST(Lagrangian, Membership) {
  EXPECT_TRUE(is_lagrangian(lagrangian_e(2)));
  EXPECT_FALSE(is_lagrangian(RatMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}}));
  EXPECT_FALSE(is_lagrangian(RatMatrix{{1, 2}, {0, 0}, {0, 0}, {0, 0}}));  // rank 1
  Sampler s(1);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_lagrangian(graph_lagrangian(s.symmetric_matrix(3, -3, 3)).basis()));
  EXPECT_THROW(Lagrangian(RatMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}}), DomainError);
}

TEST(SymplecticGenerators, AreSymplectic) {
  Sampler s(2);
  for (int t = 0; t < 10; ++t) {
    EXPECT_TRUE(is_symplectic_matrix(symplectic_upper(s.symmetric_matrix(2, -3, 3))));
    EXPECT_TRUE(is_symplectic_matrix(symplectic_lower(s.symmetric_matrix(2, -3, 3))));
    EXPECT_TRUE(is_symplectic_matrix(symplectic_levi(s.invertible_matrix(2, -3, 3))));
    EXPECT_TRUE(is_symplectic_matrix(random_symplectic(s, 3)));
  }
  EXPECT_FALSE(is_symplectic_matrix(diagonal<Rational>({2, 1, 1, 1})));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(RatMatrix::identity(3)), (Signature{3, 0, 0}));
  EXPECT_EQ(signature(RatMatrix{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
  EXPECT_EQ(signature(diagonal<Rational>({2, -3, 0})), (Signature{1, 1, 1}));
  EXPECT_EQ(signature(RatMatrix(3, 3)), (Signature{0, 0, 3}));
}

TEST(Signature, CongruenceIsExact) {
  Sampler s(3);
  for (int t = 0; t < 30; ++t) {
    RatMatrix q = s.symmetric_matrix(4, -3, 3);
    if (t % 3 == 0)
      for (std::size_t i = 0; i < 4; ++i) q(i, i) = 0;  // forces the hyperbolic step
    const auto c = diagonalize_congruence(q);
    EXPECT_EQ(c.change.transpose() * q * c.change, diagonal(c.diagonal));
    EXPECT_NE(det(c.change), 0);
    EXPECT_EQ(signature(q), signature_by_minors(q, s));
  }
}

TEST(Signature, RejectsNonSymmetric) { EXPECT_THROW(signature(RatMatrix{{0, 1}, {0, 0}}), DomainError); }

TEST(Maslov, OneDimensionalExamples) {
  const Lagrangian p = line(1, 0), q = line(0, 1);
  EXPECT_EQ(maslov_index(p, q, line(1, 1)), -1);
  EXPECT_EQ(maslov_index(p, q, line(1, -1)), 1);
  EXPECT_EQ(maslov_transverse(p, q, line(1, 1)), -1);
  EXPECT_EQ(maslov_transverse(p, q, line(1, -1)), 1);
  EXPECT_EQ(maslov_index(p, p, q), 0);
}

TEST(Maslov, KashiwaraGramIsSymmetric) {
  Sampler s(4);
  for (int t = 0; t < 20; ++t) {
    const auto l = random_lagrangian_tuple(s, 2, 3);
    EXPECT_TRUE(is_symmetric(kashiwara_gram(l[0], l[1], l[2])));
  }
}

TEST(Maslov, AlternatingAndInvariant) {
  Sampler s(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const auto l = random_lagrangian_tuple(s, n, 3);
    const long tau = maslov_index(l[0], l[1], l[2]);
    EXPECT_EQ(maslov_index(l[1], l[0], l[2]), -tau);
    EXPECT_EQ(maslov_index(l[0], l[2], l[1]), -tau);
    EXPECT_EQ(maslov_index(l[1], l[2], l[0]), tau);
    EXPECT_LE(std::labs(tau), static_cast<long>(3 * n));
    const RatMatrix g = random_symplectic(s, n);
    EXPECT_EQ(maslov_index(act(g, l[0]), act(g, l[1]), act(g, l[2])), tau);
  }
}

TEST(Maslov, TransverseFormulaAgrees) {
  Sampler s(6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const auto l = transverse_triple(s, n);
    EXPECT_EQ(maslov_transverse(l[0], l[1], l[2]), maslov_index(l[0], l[1], l[2]));
    EXPECT_LE(std::labs(maslov_index(l[0], l[1], l[2])), static_cast<long>(n));
    // S is nondegenerate exactly when L2 is transverse to L1 and L3
    EXPECT_EQ(signature(transverse_form(l[0], l[1], l[2])).zero, 0u);
  }
}

TEST(Maslov, TransverseFormDetectsNonTransverseMiddle) {
  const Lagrangian p = line(1, 0), q = line(0, 1);
  EXPECT_EQ(signature(transverse_form(p, p, q)).zero, 1u);
}

TEST(Maslov, TransverseFormulaNeedsL1L3Transverse) {
  const Lagrangian p = line(1, 0), q = line(0, 1);
  EXPECT_THROW(maslov_transverse(p, q, p), PreconditionError);
}

TEST(NormalForm, OneDimensional) {
  const auto nf = normal_form(line(1, 0), line(0, 1), line(1, 1));
  EXPECT_EQ(nf.k, 1u);
  const auto nf2 = normal_form(line(1, 0), line(0, 1), line(1, -1));
  EXPECT_EQ(nf2.k, 0u);
}

TEST(NormalForm, ReproducesTripleAndIndex) {
  Sampler s(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const auto l = transverse_triple(s, n);
    const auto nf = normal_form(l[0], l[1], l[2]);
    EXPECT_EQ(maslov_index(l[0], l[1], l[2]), static_cast<long>(n) - 2 * static_cast<long>(nf.k));
    EXPECT_EQ(nf.basis.transpose() * symplectic_form(n) * nf.basis, symplectic_form(n));
    EXPECT_TRUE(same_subspace(nf.basis.left_cols(n), l[0].basis()));
    EXPECT_TRUE(same_subspace(nf.basis.block(0, n, 2 * n, n), l[1].basis()));
    EXPECT_TRUE(same_subspace(normal_form_third(nf).basis(), l[2].basis()));
    EXPECT_TRUE(std::is_sorted(nf.epsilon.rbegin(), nf.epsilon.rend()));
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(nf.epsilon[i], i < nf.k ? 1 : -1);
    for (const auto& w : nf.weight) EXPECT_GT(w, 0);
  }
}

TEST(NormalForm, RejectsNonTransverse) {
  EXPECT_THROW(normal_form(line(1, 0), line(1, 0), line(0, 1)), PreconditionError);
}

TEST(ChainRule, CocycleOnRandomQuadruples) {
  Sampler s(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    const auto l = random_lagrangian_tuple(s, n, 4);
    EXPECT_EQ(chain_rule_defect(l[0], l[1], l[2], l[3]), 0);
  }
  const Lagrangian p = line(1, 0);
  EXPECT_EQ(chain_rule_defect(p, p, p, p), 0);
}

TEST(ChainRule, LiteralOrderingFailsWhenFourthEqualsSecond) {
  // tau(1,2,3) against tau(1,2,4) + tau(2,3,4) + tau(1,3,4) with L4 = L2:
  // the last term is tau(1,3,2) = -tau(1,2,3), so the literal sum is off by 2 tau.
  const Lagrangian l1 = line(1, 0), l2 = line(0, 1), l3 = line(1, 1);
  const long literal = maslov_index(l1, l2, l2) + maslov_index(l2, l3, l2) + maslov_index(l1, l3, l2);
  EXPECT_EQ(maslov_index(l1, l2, l3) - literal, 2 * maslov_index(l1, l2, l3));
  EXPECT_NE(maslov_index(l1, l2, l3), literal);
  EXPECT_EQ(chain_rule_defect(l1, l2, l3, l2), 0);
}
