#ifndef POSKIT_ACCEPTANCE_HPP
#define POSKIT_ACCEPTANCE_HPP

#include "poskit/exactmat.hpp"
#include "poskit/flags.hpp"
#include "poskit/liealg.hpp"
#include "poskit/random.hpp"
#include "poskit/samples.hpp"
#include "poskit/siegel.hpp"
#include "poskit/symplectic.hpp"
#include "poskit/thetapos.hpp"
#include "poskit/totpos.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace poskit {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string group;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  std::string only;  // empty, or a group name
  Tolerance tol;
};

namespace acceptance {

// Every check is counted; the first failure is described.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  bool passed() const { return failures_ == 0; }
  std::string summary(const std::string& prefix) const {
    std::ostringstream os;
    os << prefix << "; " << checks_ - failures_ << "/" << checks_ << " checks";
    if (!first_failure_.empty()) os << "; first failure: " << first_failure_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

inline CriterionResult make(int id, std::string name, std::string group, const Tally& t, const std::string& prefix) {
  return {id, std::move(name), std::move(group), t.passed(), t.summary(prefix)};
}

inline CriterionResult cauchy_binet(Sampler& s) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix a = s.rational_matrix(4, 4, -5, 5);
    const RatMatrix b = s.rational_matrix(4, 4, -5, 5);
    for (std::size_t k = 1; k <= 4; ++k)
      t.check(compound(a * b, k) == compound(a, k) * compound(b, k), "pair " + std::to_string(trial) + " k=" + std::to_string(k));
  }
  return make(1, "cauchy_binet", "exactmat", t, "100 random 4x4 pairs, k = 1..4, exact");
}

inline RatMatrix u3(const Rational& x, const Rational& y, const Rational& z) {
  return RatMatrix{{1, x, y}, {0, 1, z}, {0, 0, 1}};
}

inline CriterionResult u_positive_grid() {
  Tally t;
  const std::vector<Rational> grid{Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                                   Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
  for (const auto& x : grid)
    for (const auto& y : grid)
      for (const auto& z : grid) {
        const bool expected = x > 0 && y > 0 && z > 0 && x * z - y > 0;
        t.check(is_U_positive(u3(x, y, z)) == expected,
                "(x,y,z)=(" + to_string(x) + "," + to_string(y) + "," + to_string(z) + ")");
      }
  return make(2, "u_positive_n3_criterion", "totpos", t, "10x10x10 grid against x>0, y>0, z>0, xz-y>0");
}

inline CriterionResult parametrization(Sampler& s) {
  Tally t;
  for (int draw = 0; draw < 50; ++draw) {
    const std::size_t n = 2 + static_cast<std::size_t>(draw % 4);
    const ReducedWord w = longest_word(n);
    t.check(w.letters.size() == n * (n - 1) / 2, "word length n=" + std::to_string(n));
    std::vector<Rational> params;
    for (std::size_t i = 0; i < w.letters.size(); ++i) params.push_back(s.positive_rational(5));
    t.check(is_U_positive(param_F(w, params)), "longest word draw " + std::to_string(draw));
  }
  for (int point = 0; point < 20; ++point) {
    const Rational a = s.rational(-5, 5), b = s.rational(-5, 5), c = s.rational(-5, 5);
    const RatMatrix expected{{1, a + c, a * b}, {0, 1, b}, {0, 0, 1}};
    t.check(param_F({{1, 2, 1}, 3}, {a, b, c}) == expected, "word (1,2,1) point " + std::to_string(point));
  }
  return make(3, "parametrization", "totpos", t, "longest word n<=5 x 50 draws; (1,2,1) product at 20 points");
}

inline std::vector<RatMatrix> tp_samples(std::uint64_t seed) {
  Sampler s(seed);
  std::vector<RatMatrix> out;
  for (int i = 0; i < 50; ++i) out.push_back(random_tp(s, 2 + static_cast<std::size_t>(i % 4)));
  return out;
}

inline bool unit_lower(const RatMatrix& l) {
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = i; j < l.cols(); ++j)
      if (l(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

inline CriterionResult whitney(const std::vector<RatMatrix>& samples) {
  Tally t;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const RatMatrix& m = samples[i];
    const std::string tag = "sample " + std::to_string(i);
    t.check(is_totally_positive(m), tag + " is TP");
    const auto f = whitney_factorize(m);
    t.check(f.lower * f.diag * f.upper == m, tag + " reconstructs");
    t.check(unit_lower(f.lower) && is_U_positive(f.lower.transpose()), tag + " lower factor in the positive lower semigroup");
    t.check(is_U_positive(f.upper), tag + " upper factor in U>0");
    bool diag_ok = true;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if ((r == c && f.diag(r, c) <= 0) || (r != c && f.diag(r, c) != 0)) diag_ok = false;
    t.check(diag_ok, tag + " positive diagonal");
  }
  return make(4, "whitney_round_trip", "totpos", t, "50 TP products, n = 2..5");
}

inline CriterionResult gantmacher_krein(const std::vector<RatMatrix>& samples) {
  Tally t;
  for (std::size_t i = 0; i < samples.size(); ++i)
    t.check(gk_spectrum_check(samples[i], 1e-9), "sample " + std::to_string(i));
  return make(5, "gantmacher_krein", "totpos", t, "50 TP samples, distinct positive real eigenvalues at tol 1e-9");
}

inline CriterionResult gw_bd(Sampler& s) {
  Tally t;
  const Flag asc = standard_ascending(3), desc = standard_descending(3);
  std::size_t positives = 0, generated = 0;
  while (generated < 200) {
    const RatMatrix u = s.unitriangular(3, -5, 5);
    const Flag ue = act(u, desc);
    if (!is_generic({asc, desc, ue})) continue;
    ++generated;
    const bool gw = is_GW_positive({desc, ue, asc});
    const bool bd = is_BD_positive({asc, desc, ue});
    if (gw) ++positives;
    t.check(gw == bd, "u sample " + std::to_string(generated));
  }
  const RatMatrix ex{{1, -2, 1}, {0, 1, -1}, {0, 0, 1}};
  const FlagTriple triple{desc, act(ex, desc), asc};
  t.check(is_GW_positive(triple), "exercise triple GW-positive");
  const RatMatrix d = diagonal<Rational>({-1, 1, -1});
  t.check(is_U_positive(d * ex * inverse(d)), "diag(-1,1,-1) conjugate in U>0");
  return make(6, "gw_iff_bd_n3", "flags", t,
              "200 generic u (" + std::to_string(positives) + " positive) plus the exercise matrix");
}

inline CriterionResult sign_lemma(Sampler& s) {
  Tally t;
  for (int draw = 0; draw < 50; ++draw) {
    const std::size_t n = 2 + static_cast<std::size_t>(draw % 4);
    const RatMatrix u = s.unitriangular(n, -5, 5);
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = 0; a + b <= n; ++b)
        t.check(sign_lemma_check(u, a, b, n - a - b), "draw " + std::to_string(draw));
  }
  return make(7, "sign_lemma", "flags", t, "50 random unitriangular u, n = 2..5, all (a,b,c)");
}

inline CriterionResult maslov(Sampler& s) {
  Tally t;
  for (int q = 0; q < 200; ++q) {
    const std::size_t n = 1 + static_cast<std::size_t>(q % 3);
    const auto l = random_lagrangian_tuple(s, n, 4);
    t.check(chain_rule_defect(l[0], l[1], l[2], l[3]) == 0, "chain rule quadruple " + std::to_string(q));
    const long tau = maslov_index(l[0], l[1], l[2]);
    t.check(std::labs(tau) <= static_cast<long>(n), "|tau| <= n on quadruple " + std::to_string(q));
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    std::vector<Lagrangian> l;
    do l = {random_lagrangian(s, n), random_lagrangian(s, n), random_lagrangian(s, n)};
    while (!intersects_trivially(l[0], l[1]) || !intersects_trivially(l[1], l[2]) || !intersects_trivially(l[0], l[2]));
    const long tau = maslov_index(l[0], l[1], l[2]);
    const NormalForm nf = normal_form(l[0], l[1], l[2]);
    t.check(tau == static_cast<long>(n) - 2 * static_cast<long>(nf.k), "tau = n - 2k, triple " + std::to_string(k));
    t.check(is_symplectic_matrix(nf.basis), "normal form basis symplectic");
    t.check(same_subspace(nf.basis.left_cols(n), l[0].basis()) && same_subspace(nf.basis.block(0, n, 2 * n, n), l[1].basis()) &&
                same_subspace(normal_form_third(nf).basis(), l[2].basis()),
            "normal form reproduces the triple");
    t.check(std::labs(tau) <= static_cast<long>(n), "|tau| <= n on transverse triple");
    t.check(maslov_transverse(l[0], l[1], l[2]) == tau, "transverse formula agrees");
  }
  for (int c = 0; c < 20; ++c) {
    const std::size_t n = 1 + static_cast<std::size_t>(c % 3);
    const auto l = random_lagrangian_tuple(s, n, 3);
    const RatMatrix g = random_symplectic(s, n);
    t.check(maslov_index(act(g, l[0]), act(g, l[1]), act(g, l[2])) == maslov_index(l[0], l[1], l[2]),
            "Sp invariance " + std::to_string(c));
  }
  return make(8, "maslov", "maslov", t,
              "chain rule on 200 quadruples; tau = n - 2k on 100 transverse triples; bounds; 20 Sp conjugations");
}

inline std::map<RootCoeffs, std::size_t> expected_roots(const LieAlgebraSpec& spec) {
  std::map<RootCoeffs, std::size_t> out;
  const std::size_t len = spec.epsilon_count();
  auto unit = [&](std::size_t i, long v) {
    RootCoeffs c(len, 0);
    c[i] = v;
    return c;
  };
  auto pair = [&](std::size_t i, long a, std::size_t j, long b) {
    RootCoeffs c(len, 0);
    c[i] = a;
    c[j] = b;
    return c;
  };
  switch (spec.family) {
    case Family::so:
      for (std::size_t i = 0; i < len; ++i) {
        if (spec.p != spec.q) {
          out[unit(i, 1)] = spec.q - spec.p;
          out[unit(i, -1)] = spec.q - spec.p;
        }
        for (std::size_t j = i + 1; j < len; ++j)
          for (long a : {1L, -1L})
            for (long b : {1L, -1L}) out[pair(i, a, j, b)] = 1;
      }
      break;
    case Family::sl:
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j)
          if (i != j) out[pair(i, 1, j, -1)] = 1;
      break;
    case Family::sp:
      for (std::size_t i = 0; i < len; ++i) {
        out[unit(i, 2)] = 1;
        out[unit(i, -2)] = 1;
        for (std::size_t j = i + 1; j < len; ++j)
          for (long a : {1L, -1L})
            for (long b : {1L, -1L}) out[pair(i, a, j, b)] = 1;
      }
      break;
  }
  return out;
}

inline CriterionResult root_tables() {
  Tally t;
  struct Row {
    LieAlgebraSpec spec;
    std::string dynkin;
    bool split;
  };
  const std::vector<Row> rows{{LieAlgebraSpec::so(2, 3), "B2", true},
                              {LieAlgebraSpec::so(2, 4), "B2", false},
                              {LieAlgebraSpec::so(3, 3), "D3", true},
                              {LieAlgebraSpec::sl(3), "A2", true},
                              {LieAlgebraSpec::sp(2), "C2", true}};
  for (const auto& row : rows) {
    const auto rd = restricted_roots(row.spec);
    const std::string tag = row.spec.name();
    std::map<RootCoeffs, std::size_t> got;
    for (const auto& r : rd.roots) got[r.coeffs] = r.multiplicity;
    t.check(got == expected_roots(row.spec), tag + " root list and multiplicities");
    t.check(rd.dynkin == row.dynkin, tag + " Dynkin label " + rd.dynkin);
    t.check(is_split(rd) == row.split, tag + " splitness");
    t.check(rd.dimension_total() == dim(row.spec) && dim(row.spec) == LieAlgebra(row.spec).dim(), tag + " dimension audit");
    t.check(rd.a_basis.size() == row.spec.real_rank(), tag + " rank");
    for (const auto& r : rd.roots)
      for (const auto& x : r.space_basis) {
        const auto vals = rd.evaluate(r.coeffs);
        for (std::size_t k = 0; k < rd.a_basis.size(); ++k)
          t.check(bracket(rd.a_basis[k], x) == x * vals[k], tag + " eigen-equation");
      }
  }
  return make(9, "root_decompositions", "liealg", t, "so(2,3), so(2,4), so(3,3), sl(3), sp(4)");
}

inline RatMatrix random_element(Sampler& s, const LieAlgebra& g) {
  RatMatrix coords(g.dim(), 1);
  for (std::size_t i = 0; i < g.dim(); ++i) coords(i, 0) = s.rational(-3, 3, 4);
  return g.combine(coords);
}

inline CriterionResult killing_forms(Sampler& s) {
  Tally t;
  const std::vector<LieAlgebraSpec> families{LieAlgebraSpec::sl(3), LieAlgebraSpec::sp(2), LieAlgebraSpec::so(2, 3)};
  for (const auto& spec : families) {
    const LieAlgebra g(spec);
    for (int pair = 0; pair < 50; ++pair) {
      const RatMatrix x = random_element(s, g), y = random_element(s, g);
      t.check(killing(x, y, spec) == killing_via_ad(x, y, g), spec.name() + " pair " + std::to_string(pair));
    }
  }
  const RatMatrix gram = killing_gram(sl3_exercise_basis(), LieAlgebraSpec::sl(3));
  RatMatrix expected(8, 8);
  for (std::size_t i = 0; i < 3; ++i) expected(i, i) = -12;
  for (std::size_t i = 3; i < 8; ++i) expected(i, i) = 12;
  expected(6, 7) = expected(7, 6) = 6;
  t.check(gram == expected, "sl(3) Gram matrix");
  t.check(signature(gram) == Signature{5, 3, 0}, "sl(3) Gram signature (5,3)");
  return make(10, "killing_forms", "liealg", t, "50 pairs in sl(3), sp(4), so(2,3); sl(3) Gram matrix");
}

inline RatMatrix f1212_closed_form(const Rational& x, const Rational& v, const Rational& y, const Rational& w) {
  const Rational half(1, 2);
  return RatMatrix{{1, x + y, x * v + (x + y) * w, x * (v + w) * (v + w) * half + y * w * w * half, x * y * v * v * half},
                   {0, 1, v + w, (v + w) * (v + w) * half, y * v * v * half},
                   {0, 0, 1, v + w, y * v},
                   {0, 0, 0, 1, x + y},
                   {0, 0, 0, 0, 1}};
}

inline CriterionResult theta_criterion(Sampler& s, std::uint64_t seed) {
  Tally t;
  const auto so23 = restricted_roots(LieAlgebraSpec::so(2, 3));
  t.check(admits_theta_positive(so23, ThetaChoice::all(so23)).admits, "so(2,3), Delta: yes");
  t.check(admits_theta_positive(so23, {{1}}).admits, "so(2,3), {alpha1}: yes");
  t.check(!admits_theta_positive(so23, {{2}}).admits, "so(2,3), {alpha2}: no");
  for (std::size_t q : {4u, 5u}) {
    const auto rd = restricted_roots(LieAlgebraSpec::so(2, q));
    t.check(!admits_theta_positive(rd, ThetaChoice::all(rd)).admits, "so(2," + std::to_string(q) + "), Delta: no");
  }
  // the long simple root 2 eps_2 of sp(4)
  t.check(admits_theta_positive(LieAlgebraSpec::sp(2), {{2}}).admits, "sp(4), {2 eps2}: yes");
  for (int point = 0; point < 20; ++point) {
    const Rational x = s.rational(-4, 4), v = s.rational(-4, 4), y = s.rational(-4, 4), w = s.rational(-4, 4);
    t.check(so23_F1212(x, v, y, w) == f1212_closed_form(x, v, y, w), "F1212 point " + std::to_string(point));
  }
  t.check(cone_invariance_sample(LieAlgebraSpec::so(2, 3), {{1}}, 100, seed).passed, "so(2,3) cone invariance");
  t.check(cone_invariance_sample(LieAlgebraSpec::sp(2), {{2}}, 100, seed).passed, "sp(4) cone invariance");
  return make(11, "theta_criterion", "theta", t, "verdict table; F1212 at 20 points; 100 cone trials per worked example");
}

inline CriterionResult siegel_geometry(Sampler& s, const Tolerance& tol) {
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const RMatrix g = random_real_symplectic(s, n), h = random_real_symplectic(s, n);
    const CMatrix z = random_siegel_point(s, n);
    const CMatrix lhs = mobius(g, mobius(h, z, tol), tol);
    const CMatrix rhs = mobius(g * h, z, tol);
    t.check((lhs - rhs).cwiseAbs().maxCoeff() < 1e-7, "composition " + std::to_string(trial));
    const CMatrix gz = mobius(g, z, tol);
    t.check((gz.imag() - mobius_imaginary_part(g, z)).cwiseAbs().maxCoeff() < 1e-8, "Im formula " + std::to_string(trial));
    t.check(in_siegel(gz, tol), "image in Siegel space");
    t.check((cayley_inv(cayley(z), tol) - z).cwiseAbs().maxCoeff() < 1e-7, "Cayley round trip " + std::to_string(trial));
    t.check(in_bounded(cayley(z), tol), "Cayley image bounded");
  }
  // Random walks drift toward the Shilov boundary, so the surviving eigenvalue of
  // I - conj(W) W shrinks to ~1e-10 within 20 steps while rounding stays near 1e-16.
  const Tolerance rank_tol(std::min(tol.eps(), 1e-12));
  for (int orbit = 0; orbit < 10; ++orbit) {
    const double r = s.real(0.0, 0.9), angle = s.real(0.0, 6.283185307179586);
    CMatrix w = CMatrix::Zero(2, 2);
    w(0, 0) = std::polar(r, angle);
    w(1, 1) = -1.0;
    t.check(boundary_rank(w, rank_tol) == 1, "start point rank 1");
    for (int step = 0; step < 20; ++step) {
      w = conj_mobius(conj_group(random_real_symplectic(s, 2)), w);
      const auto cls = classify_bounded(w, rank_tol);
      t.check(cls.position == DiskPosition::boundary && cls.rank == 1,
              "orbit " + std::to_string(orbit) + " step " + std::to_string(step));
    }
  }
  return make(12, "siegel", "siegel", t,
              "100 composition/Im/Cayley samples, n <= 3; 10 boundary orbits of 20 steps");
}

inline const std::vector<std::string>& groups() {
  static const std::vector<std::string> g{"exactmat", "totpos", "flags", "maslov", "liealg", "theta", "siegel"};
  return g;
}

}  // namespace acceptance

// Runs every criterion (or one group) with streams derived from the seed.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  using namespace acceptance;
  std::string only = opt.only == "symplectic" ? "maslov" : opt.only == "thetapos" ? "theta" : opt.only;
  if (!only.empty() && std::find(groups().begin(), groups().end(), only) == groups().end())
    throw std::invalid_argument("unknown acceptance group '" + opt.only + "'");
  auto want = [&](const char* g) { return only.empty() || only == g; };
  auto stream = [&](int id) { return Sampler(opt.seed * 1000003u + static_cast<std::uint64_t>(id)); };
  std::vector<CriterionResult> out;
  if (want("exactmat")) {
    auto s = stream(1);
    out.push_back(cauchy_binet(s));
  }
  if (want("totpos")) {
    out.push_back(u_positive_grid());
    auto s3 = stream(3);
    out.push_back(parametrization(s3));
    const auto samples = tp_samples(opt.seed * 1000003u + 4);
    out.push_back(whitney(samples));
    out.push_back(gantmacher_krein(samples));
  }
  if (want("flags")) {
    auto s6 = stream(6);
    out.push_back(gw_bd(s6));
    auto s7 = stream(7);
    out.push_back(sign_lemma(s7));
  }
  if (want("maslov")) {
    auto s = stream(8);
    out.push_back(maslov(s));
  }
  if (want("liealg")) {
    out.push_back(root_tables());
    auto s = stream(10);
    out.push_back(killing_forms(s));
  }
  if (want("theta")) {
    auto s = stream(11);
    out.push_back(theta_criterion(s, opt.seed));
  }
  if (want("siegel")) {
    auto s = stream(12);
    out.push_back(siegel_geometry(s, opt.tol));
  }
  return out;
}

}  // namespace poskit

#endif  // POSKIT_ACCEPTANCE_HPP
