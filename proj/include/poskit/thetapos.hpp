#ifndef POSKIT_THETAPOS_HPP
#define POSKIT_THETAPOS_HPP

#include "poskit/exactmat.hpp"
#include "poskit/liealg.hpp"
#include "poskit/random.hpp"
#include "poskit/symplectic.hpp"
#include "poskit/totpos.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace poskit {

// 1-based indices into the simple roots of a RootDecomposition.
struct ThetaChoice {
  std::vector<std::size_t> indices;

  static ThetaChoice all(const RootDecomposition& rd) {
    ThetaChoice t;
    for (std::size_t i = 1; i <= rd.simple.size(); ++i) t.indices.push_back(i);
    return t;
  }
  bool contains(std::size_t i) const { return std::find(indices.begin(), indices.end(), i) != indices.end(); }
};

// Conditions (i) and (ii) for one beta in Theta.
struct BetaVerdict {
  std::size_t index = 0;
  RootCoeffs root;
  std::size_t multiplicity = 0;
  bool one_dimensional = false;
  bool even_cartan = false;
  std::vector<std::pair<std::size_t, long>> cartan_against;  // (alpha index, <alpha, beta>)
  std::string reason;
};

struct WeightSpace {
  std::vector<Rational> weight;  // values on z_theta_basis
  std::vector<RootCoeffs> roots;
  std::vector<RatMatrix> basis;
};

struct ThetaReport {
  LieAlgebraSpec spec;
  ThetaChoice theta;
  bool admits = false;
  std::vector<BetaVerdict> reasons;
  std::vector<RatMatrix> u_theta_basis;
  std::vector<RatMatrix> u_opp_basis;
  std::vector<RatMatrix> l_theta_basis;
  std::vector<RatMatrix> z_theta_basis;
  std::vector<WeightSpace> weight_spaces;
  std::string cone = "not constructed";
};

namespace detail {

inline void validate_theta(const RootDecomposition& rd, const ThetaChoice& theta) {
  if (theta.indices.empty()) throw DomainError("theta must be non-empty");
  std::vector<std::size_t> seen;
  for (auto i : theta.indices) {
    if (i < 1 || i > rd.simple.size()) throw DomainError("theta index " + std::to_string(i) + " out of range");
    if (std::find(seen.begin(), seen.end(), i) != seen.end()) throw DomainError("theta index repeated");
    seen.push_back(i);
  }
}

inline std::vector<Rational> weight_on(const RootCoeffs& root, const std::vector<RatMatrix>& z_basis) {
  std::vector<Rational> out;
  for (const auto& z : z_basis) {
    Rational v = 0;
    for (std::size_t i = 0; i < root.size(); ++i) v += root[i] * z(i, i);
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline ThetaReport theta_decompose(const RootDecomposition& rd, const ThetaChoice& theta) {
  detail::validate_theta(rd, theta);
  ThetaReport rep;
  rep.spec = rd.spec;
  rep.theta = theta;

  std::vector<const RestrictedRoot*> levi_roots;   // roots in span(Delta \ Theta)
  std::vector<const RestrictedRoot*> theta_roots;  // Sigma_Theta^+
  for (const auto& r : rd.roots) {
    const auto e = rd.simple_expansion(r.coeffs);
    bool touches_theta = false;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0 && theta.contains(j + 1)) touches_theta = true;
    if (!touches_theta) levi_roots.push_back(&r);
    else if (rd.is_positive(r.coeffs)) theta_roots.push_back(&r);
  }

  // l_theta = a + Z_k(a) + root spaces of the Levi roots
  rep.l_theta_basis = rd.a_basis;
  rep.l_theta_basis.insert(rep.l_theta_basis.end(), rd.zero_space_basis.begin(), rd.zero_space_basis.end());
  for (const auto* r : levi_roots) rep.l_theta_basis.insert(rep.l_theta_basis.end(), r->space_basis.begin(), r->space_basis.end());

  for (const auto* r : theta_roots) {
    rep.u_theta_basis.insert(rep.u_theta_basis.end(), r->space_basis.begin(), r->space_basis.end());
    RootCoeffs neg = r->coeffs;
    for (auto& x : neg) x = -x;
    const auto* opp = rd.find(neg);
    if (!opp) throw DomainError("theta_decompose: root system not symmetric");
    rep.u_opp_basis.insert(rep.u_opp_basis.end(), opp->space_basis.begin(), opp->space_basis.end());
  }

  // z_theta = { a in a : [a, X] = 0 for all X in l_theta }
  const std::size_t size = rd.spec.matrix_size();
  RatMatrix sys(0, rd.a_basis.size());
  for (const auto& x : rep.l_theta_basis) {
    RatMatrix block(size * size, rd.a_basis.size());
    for (std::size_t k = 0; k < rd.a_basis.size(); ++k) block.set_block(0, k, vectorize(bracket(rd.a_basis[k], x)));
    sys = vconcat(sys, block);
  }
  for (const auto& v : kernel(sys)) {
    RatMatrix z(size, size);
    for (std::size_t k = 0; k < rd.a_basis.size(); ++k) z += rd.a_basis[k] * v(k, 0);
    rep.z_theta_basis.push_back(std::move(z));
  }

  for (const auto* r : theta_roots) {
    const auto w = detail::weight_on(r->coeffs, rep.z_theta_basis);
    auto it = std::find_if(rep.weight_spaces.begin(), rep.weight_spaces.end(),
                           [&](const WeightSpace& ws) { return ws.weight == w; });
    if (it == rep.weight_spaces.end()) {
      rep.weight_spaces.push_back({w, {}, {}});
      it = rep.weight_spaces.end() - 1;
    }
    it->roots.push_back(r->coeffs);
    it->basis.insert(it->basis.end(), r->space_basis.begin(), r->space_basis.end());
  }
  return rep;
}

inline ThetaReport admits_theta_positive(const RootDecomposition& rd, const ThetaChoice& theta) {
  ThetaReport rep = theta_decompose(rd, theta);
  rep.admits = true;
  for (auto bi : theta.indices) {
    BetaVerdict v;
    v.index = bi;
    v.root = rd.simple[bi - 1].coeffs;
    v.multiplicity = rd.simple[bi - 1].multiplicity;
    v.one_dimensional = v.multiplicity == 1;
    v.even_cartan = true;
    for (std::size_t ai = 1; ai <= rd.simple.size(); ++ai) {
      if (theta.contains(ai)) continue;
      const long c = cartan_integer(rd.simple[ai - 1].coeffs, v.root, rd);
      v.cartan_against.emplace_back(ai, c);
      if (c % 2 != 0) v.even_cartan = false;
    }
    if (!v.one_dimensional)
      v.reason = "(i) fails: root space has dimension " + std::to_string(v.multiplicity);
    else if (!v.even_cartan)
      v.reason = "(ii) fails (sharp-cone criterion fails: weight space carries an SL(2)-type action)";
    else
      v.reason = "ok";
    if (!v.one_dimensional || !v.even_cartan) rep.admits = false;
    rep.reasons.push_back(std::move(v));
  }
  if (rep.admits) {
    if (rd.spec == LieAlgebraSpec::so(2, 3) && theta.indices == std::vector<std::size_t>{1})
      rep.cone = "lorentz: v^T J v >= 0, v1 >= 0";
    else if (rd.spec == LieAlgebraSpec::sp(2) && theta.indices == std::vector<std::size_t>{2})
      rep.cone = "positive semidefinite 2x2";
  } else {
    rep.cone = "none";
  }
  return rep;
}

inline ThetaReport admits_theta_positive(const LieAlgebraSpec& spec, const ThetaChoice& theta) {
  return admits_theta_positive(restricted_roots(spec), theta);
}

// J = [[0,0,1],[0,-1,0],[1,0,0]]
inline RatMatrix so23_cone_form() { return RatMatrix{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}; }

inline bool so23_cone_contains(const std::vector<Rational>& v, bool strict) {
  if (v.size() != 3) throw ShapeError("so23 cone vectors have length 3");
  const Rational quad = 2 * v[0] * v[2] - v[1] * v[1];
  return strict ? (quad > 0 && v[0] > 0) : (quad >= 0 && v[0] >= 0);
}

// Strict: leading principal minors > 0. Closed: all principal minors >= 0.
inline bool sp4_cone_contains(const RatMatrix& m, bool strict) {
  if (m.rows() != 2 || m.cols() != 2) throw ShapeError("sp4 cone elements are 2x2");
  if (!is_symmetric(m)) return false;
  if (strict) return is_positive_definite(m);
  return m(0, 0) >= 0 && m(1, 1) >= 0 && det(m) >= 0;
}

// exp of a nilpotent matrix as a finite sum.
inline RatMatrix theta_exp(const RatMatrix& x) {
  if (!x.square()) throw ShapeError("theta_exp of non-square matrix");
  const std::size_t n = x.rows();
  RatMatrix sum = RatMatrix::identity(n);
  RatMatrix term = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * x * Rational(1, static_cast<long>(k));
    if (term.is_zero()) return sum;
    sum += term;
  }
  throw DomainError("theta_exp: matrix is not nilpotent; use a numeric exponential");
}

// x1(x) x2(v) x1(y) x2(w) with x_i(t) = exp(t e_i).
inline RatMatrix so23_F1212(const Rational& x, const Rational& v, const Rational& y, const Rational& w) {
  const auto b = so23_basis();
  return theta_exp(b.e1 * x) * theta_exp(b.e2 * v) * theta_exp(b.e1 * y) * theta_exp(b.e2 * w);
}

// Element of u_{alpha_1} in so(2,3): [[0, v^T, 0], [0, 0, Jv], [0, 0, 0]].
inline RatMatrix so23_u_element(const std::vector<Rational>& v) {
  RatMatrix m(5, 5);
  const RatMatrix jv = so23_cone_form() * RatMatrix::column_vector(v);
  for (std::size_t i = 0; i < 3; ++i) {
    m(0, 1 + i) = v[i];
    m(1 + i, 4) = jv(i, 0);
  }
  return m;
}

struct ConeTestResult {
  bool passed = true;
  std::size_t trials = 0;
  std::size_t exact_trials = 0;
  std::size_t failures = 0;
};

namespace detail {

inline std::vector<Rational> random_so23_cone_point(Sampler& s) {
  switch (s.integer(0, 5)) {
    case 0: return {0, 0, 0};
    case 1: return {s.positive_rational(4), 0, 0};  // null ray
    case 2: {
      const Rational a = s.positive_rational(3), c = s.positive_rational(3);
      return {a * a, 2 * a * c * (s.coin() ? 1 : -1), 2 * c * c};  // boundary: 2 v1 v3 = v2^2
    }
    default: {
      while (true) {
        std::vector<Rational> v{s.positive_rational(5), s.rational(-5, 5), s.positive_rational(5)};
        if (so23_cone_contains(v, false)) return v;
      }
    }
  }
}

inline Eigen::MatrixXd so23_rotation(double angle) {
  const auto b = so23_basis();
  const Eigen::MatrixXd gen = to_eigen(b.e2 - b.f2) * angle;
  return gen.exp();
}

inline RatMatrix random_gl2_positive(Sampler& s) {
  RatMatrix a = diagonal<Rational>({s.positive_rational(4), s.positive_rational(4)});
  for (int k = 0; k < 2; ++k) {
    a = a * RatMatrix{{1, s.rational(-3, 3)}, {0, 1}};
    a = a * RatMatrix{{1, 0}, {s.rational(-3, 3), 1}};
  }
  return a;
}

}  // namespace detail

inline ConeTestResult cone_invariance_sample(const LieAlgebraSpec& spec, const ThetaChoice& theta, std::size_t trials,
                                             std::uint64_t seed, double tol = 1e-9) {
  Sampler s(seed);
  ConeTestResult res;
  const bool so23 = spec == LieAlgebraSpec::so(2, 3) && theta.indices == std::vector<std::size_t>{1};
  const bool sp4 = spec == LieAlgebraSpec::sp(2) && theta.indices == std::vector<std::size_t>{2};
  if (!so23 && !sp4) throw DomainError("cone_invariance_sample: no explicit cone for " + spec.name());
  for (std::size_t t = 0; t < trials; ++t) {
    ++res.trials;
    bool ok = true;
    if (so23) {
      // Levi element: exact torus and unipotent factors, numeric rotation on odd trials
      const auto b = so23_basis();
      const Rational a1 = s.positive_rational(4), a2 = s.positive_rational(4);
      RatMatrix exact = diagonal<Rational>({a1, a2, 1, 1 / a2, 1 / a1});
      exact = exact * theta_exp(b.e2 * s.rational(-3, 3)) * theta_exp(b.f2 * s.rational(-3, 3));
      const auto v = detail::random_so23_cone_point(s);
      const RatMatrix y = so23_u_element(v);
      if (t % 2 == 0) {
        ++res.exact_trials;
        const RatMatrix image = exact * y * inverse(exact);
        const std::vector<Rational> w{image(0, 1), image(0, 2), image(0, 3)};
        ok = image == so23_u_element(w) && so23_cone_contains(w, false);
      } else {
        const Eigen::MatrixXd g = detail::so23_rotation(s.real(-3.2, 3.2)) * to_eigen(exact);
        const Eigen::MatrixXd image = g * to_eigen(y) * g.inverse();
        const double scale = std::max(1.0, image.cwiseAbs().maxCoeff());
        const double w0 = image(0, 1), w1 = image(0, 2), w2 = image(0, 3);
        Eigen::MatrixXd back = Eigen::MatrixXd::Zero(5, 5);
        back(0, 1) = w0;
        back(0, 2) = w1;
        back(0, 3) = w2;
        back(1, 4) = w2;
        back(2, 4) = -w1;
        back(3, 4) = w0;
        ok = (image - back).cwiseAbs().maxCoeff() <= tol * scale &&
             2 * w0 * w2 - w1 * w1 >= -tol * scale * scale && w0 >= -tol * scale;
      }
    } else {
      ++res.exact_trials;
      const RatMatrix a = detail::random_gl2_positive(s);
      const RatMatrix g = symplectic_levi(a);
      RatMatrix m(2, 2);
      if (s.integer(0, 4) != 0) {
        const RatMatrix half = s.rational_matrix(2, s.integer(1, 2), -3, 3);
        m = half * half.transpose();
      }
      RatMatrix y(4, 4);
      y.set_block(0, 2, m);
      const RatMatrix image = g * y * inverse(g);
      const RatMatrix moved = image.block(0, 2, 2, 2);
      RatMatrix expected(4, 4);
      expected.set_block(0, 2, a * m * a.transpose());
      ok = image == expected && sp4_cone_contains(moved, false);
    }
    if (!ok) {
      ++res.failures;
      res.passed = false;
    }
  }
  return res;
}

}  // namespace poskit

#endif  // POSKIT_THETAPOS_HPP
