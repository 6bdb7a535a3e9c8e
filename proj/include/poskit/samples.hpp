#ifndef POSKIT_SAMPLES_HPP
#define POSKIT_SAMPLES_HPP

// Seeded generators of structured random inputs, shared by the test suites,
// the acceptance harness and the CLI.

#include "poskit/exactmat.hpp"
#include "poskit/random.hpp"
#include "poskit/siegel.hpp"
#include "poskit/symplectic.hpp"
#include "poskit/totpos.hpp"

namespace poskit {

// Product of the three generator families of Sp(2n).
inline RatMatrix random_symplectic(Sampler& s, std::size_t n, int rounds = 2) {
  RatMatrix g = RatMatrix::identity(2 * n);
  for (int r = 0; r < rounds; ++r) {
    g = g * symplectic_upper(s.symmetric_matrix(n, -2, 2, 3));
    g = g * symplectic_lower(s.symmetric_matrix(n, -2, 2, 3));
    g = g * symplectic_levi(s.invertible_matrix(n, -2, 2, 3));
  }
  return g;
}

inline RatMatrix lagrangian_e(std::size_t n) {
  RatMatrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, i) = 1;
  return b;
}

inline Lagrangian random_lagrangian(Sampler& s, std::size_t n) {
  return Lagrangian(random_symplectic(s, n, 1) * lagrangian_e(n));
}

// Graph {(v, Sv)} of a symmetric S; low rank S gives non-transverse positions.
inline Lagrangian graph_lagrangian(const RatMatrix& sym) {
  const std::size_t n = sym.rows();
  RatMatrix b(2 * n, n);
  b.set_block(0, 0, RatMatrix::identity(n));
  b.set_block(n, 0, sym);
  return Lagrangian(std::move(b));
}

// Mix of generic Lagrangians, graphs of singular forms and repeats.
inline std::vector<Lagrangian> random_lagrangian_tuple(Sampler& s, std::size_t n, std::size_t count) {
  std::vector<Lagrangian> out;
  for (std::size_t i = 0; i < count; ++i) {
    const long kind = s.integer(0, 9);
    if (kind == 0 && !out.empty()) {
      out.push_back(out[static_cast<std::size_t>(s.integer(0, static_cast<long>(out.size()) - 1))]);
    } else if (kind == 1) {
      const RatMatrix v = s.rational_matrix(n, 1, -2, 2, 2);
      out.push_back(graph_lagrangian(v * v.transpose()));
    } else {
      out.push_back(random_lagrangian(s, n));
    }
  }
  return out;
}

// L * D * U with L^T, U from the longest word and positive parameters: totally positive.
inline RatMatrix random_tp(Sampler& s, std::size_t n) {
  const ReducedWord w = longest_word(n);
  auto positive_params = [&] {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < w.letters.size(); ++i) p.push_back(s.positive_rational(3, 3));
    return p;
  };
  std::vector<Rational> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(s.positive_rational(3, 3));
  return param_F(w, positive_params()).transpose() * diagonal(d) * param_F(w, positive_params());
}

inline RMatrix random_real_symmetric(Sampler& s, Eigen::Index n, double bound) {
  RMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = s.real(-bound, bound);
  return m;
}

inline RMatrix random_real_symplectic(Sampler& s, Eigen::Index n) {
  RMatrix upper = RMatrix::Identity(2 * n, 2 * n);
  upper.topRightCorner(n, n) = random_real_symmetric(s, n, 1.0);
  RMatrix lower = RMatrix::Identity(2 * n, 2 * n);
  lower.bottomLeftCorner(n, n) = random_real_symmetric(s, n, 1.0);
  RMatrix a(n, n);
  do {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = s.real(-1.0, 1.0) + (i == j ? 1.5 : 0.0);
  } while (std::abs(a.determinant()) < 0.2);
  RMatrix levi = RMatrix::Zero(2 * n, 2 * n);
  levi.topLeftCorner(n, n) = a;
  levi.bottomRightCorner(n, n) = a.inverse().transpose();
  return upper * lower * levi;
}

// X + iY with Y = B B^T + I/2.
inline CMatrix random_siegel_point(Sampler& s, Eigen::Index n) {
  const RMatrix x = random_real_symmetric(s, n, 2.0);
  RMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = s.real(-1.0, 1.0);
  const RMatrix y = b * b.transpose() + 0.5 * RMatrix::Identity(n, n);
  CMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(x(i, j), y(i, j));
  return z;
}

}  // namespace poskit

#endif  // POSKIT_SAMPLES_HPP
