#ifndef POSKIT_SIEGEL_HPP
#define POSKIT_SIEGEL_HPP

#include "poskit/exactmat.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace poskit {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Complex = std::complex<double>;

class Tolerance {
 public:
  Tolerance() = default;
  explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0) || !std::isfinite(eps)) throw std::invalid_argument("tolerance must be a positive finite number");
  }
  double eps() const { return eps_; }

 private:
  double eps_ = 1e-9;
};

namespace detail {

inline double scale_of(const CMatrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

inline CMatrix symmetrized(const CMatrix& z) { return (z + z.transpose()) / 2.0; }

inline void require_square_even(const RMatrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0) throw ShapeError("expected a 2n x 2n matrix");
}

}  // namespace detail

inline RMatrix real_symplectic_form(Eigen::Index n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = RMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -RMatrix::Identity(n, n);
  return j;
}

inline bool is_symmetric(const CMatrix& z, const Tolerance& tol = {}) {
  return z.rows() == z.cols() && (z - z.transpose()).cwiseAbs().maxCoeff() < tol.eps() * detail::scale_of(z);
}

inline bool in_siegel(const CMatrix& z, const Tolerance& tol = {}) {
  if (z.rows() != z.cols() || z.rows() == 0 || !z.allFinite()) return false;
  if (!is_symmetric(z, tol)) return false;
  const RMatrix y = detail::symmetrized(z).imag();
  Eigen::SelfAdjointEigenSolver<RMatrix> es(y);
  return es.eigenvalues().minCoeff() > tol.eps();
}

inline bool is_symplectic(const RMatrix& g, const Tolerance& tol = {}) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0) return false;
  const RMatrix j = real_symplectic_form(g.rows() / 2);
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  return (g.transpose() * j * g - j).cwiseAbs().maxCoeff() < tol.eps() * scale * scale;
}

struct Blocks {
  RMatrix a, b, c, d;
};

inline Blocks split_blocks(const RMatrix& g) {
  detail::require_square_even(g);
  const Eigen::Index n = g.rows() / 2;
  return {g.topLeftCorner(n, n), g.topRightCorner(n, n), g.bottomLeftCorner(n, n), g.bottomRightCorner(n, n)};
}

// g(Z) = (AZ + B)(CZ + D)^-1
inline CMatrix mobius(const RMatrix& g, const CMatrix& z, const Tolerance& tol = {}) {
  if (!is_symplectic(g, tol)) throw PreconditionError("mobius: g is not symplectic");
  if (!in_siegel(z, tol)) throw PreconditionError("mobius: Z is not in the Siegel space");
  if (g.rows() != 2 * z.rows()) throw ShapeError("mobius: size mismatch");
  const auto bl = split_blocks(g);
  const CMatrix zs = detail::symmetrized(z);
  const CMatrix den = bl.c.cast<Complex>() * zs + bl.d.cast<Complex>();
  Eigen::JacobiSVD<CMatrix> svd(den);
  const auto sv = svd.singularValues();
  if (sv(sv.size() - 1) < tol.eps() * sv(0)) throw PreconditionError("mobius: CZ + D numerically singular");
  const CMatrix num = bl.a.cast<Complex>() * zs + bl.b.cast<Complex>();
  return detail::symmetrized(num * den.inverse());
}

// (Zbar^T C^T + D^T)^-1 Y (CZ + D)^-1, the imaginary part of g(Z).
// The left factor is (CZ + D)^*, so C enters transposed.
inline RMatrix mobius_imaginary_part(const RMatrix& g, const CMatrix& z) {
  const auto bl = split_blocks(g);
  const CMatrix right = bl.c.cast<Complex>() * z + bl.d.cast<Complex>();
  const CMatrix w = right.adjoint().inverse() * z.imag().cast<Complex>() * right.inverse();
  return w.real();
}

inline bool stabilizes_iI(const RMatrix& g, const Tolerance& tol = {}) {
  detail::require_square_even(g);
  const Eigen::Index n = g.rows() / 2;
  const CMatrix i_id = CMatrix::Identity(n, n) * Complex(0, 1);
  const CMatrix image = mobius(g, i_id, tol);
  const bool fixed = (image - i_id).cwiseAbs().maxCoeff() < tol.eps() * detail::scale_of(image);
  const auto bl = split_blocks(g);
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  const bool blocks = (bl.a - bl.d).cwiseAbs().maxCoeff() < tol.eps() * scale &&
                      (bl.b + bl.c).cwiseAbs().maxCoeff() < tol.eps() * scale;
  return fixed && blocks;
}

// c(Z) = (Z - iI)(Z + iI)^-1
inline CMatrix cayley(const CMatrix& z) {
  const CMatrix i_id = CMatrix::Identity(z.rows(), z.cols()) * Complex(0, 1);
  return (z - i_id) * (z + i_id).inverse();
}

// c^-1(W) = i (I + W)(I - W)^-1
inline CMatrix cayley_inv(const CMatrix& w, const Tolerance& tol = {}) {
  const CMatrix id = CMatrix::Identity(w.rows(), w.cols());
  const CMatrix den = id - w;
  Eigen::JacobiSVD<CMatrix> svd(den);
  const auto sv = svd.singularValues();
  if (sv(sv.size() - 1) < tol.eps()) throw PreconditionError("cayley_inv: I - W is singular (boundary input)");
  return Complex(0, 1) * (id + w) * den.inverse();
}

enum class DiskPosition { interior, boundary, shilov, outside };

inline std::string to_string(DiskPosition p) {
  switch (p) {
    case DiskPosition::interior: return "interior";
    case DiskPosition::boundary: return "boundary";
    case DiskPosition::shilov: return "shilov";
    case DiskPosition::outside: return "outside";
  }
  return {};
}

struct DiskClass {
  DiskPosition position = DiskPosition::outside;
  std::size_t rank = 0;  // rank of I - conj(W) W
};

// Spectral test on I - conj(W) W.
inline DiskClass classify_bounded(const CMatrix& w, const Tolerance& tol = {}) {
  if (w.rows() != w.cols() || !w.allFinite()) throw ShapeError("classify_bounded: square finite matrix expected");
  if (!is_symmetric(w, tol)) return {DiskPosition::outside, 0};
  const CMatrix ws = detail::symmetrized(w);
  const CMatrix h = CMatrix::Identity(w.rows(), w.cols()) - ws.conjugate() * ws;
  Eigen::SelfAdjointEigenSolver<CMatrix> es((h + h.adjoint()) / 2.0);
  const auto ev = es.eigenvalues();
  const double threshold = tol.eps() * detail::scale_of(ws) * detail::scale_of(ws);
  if (ev.minCoeff() < -threshold) return {DiskPosition::outside, 0};
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > threshold) ++r;
  if (r == static_cast<std::size_t>(w.rows())) return {DiskPosition::interior, r};
  if (r == 0) return {DiskPosition::shilov, 0};
  return {DiskPosition::boundary, r};
}

inline bool in_bounded(const CMatrix& w, const Tolerance& tol = {}) {
  return classify_bounded(w, tol).position == DiskPosition::interior;
}
inline bool on_shilov(const CMatrix& w, const Tolerance& tol = {}) {
  return classify_bounded(w, tol).position == DiskPosition::shilov;
}
inline std::size_t boundary_rank(const CMatrix& w, const Tolerance& tol = {}) { return classify_bounded(w, tol).rank; }

// (1 / sqrt(2i)) [[I, -iI], [I, iI]] with sqrt(2i) = 1 + i.
inline CMatrix cayley_matrix(Eigen::Index n) {
  const CMatrix id = CMatrix::Identity(n, n);
  const Complex i(0, 1);
  CMatrix c(2 * n, 2 * n);
  c << id, -i * id, id, i * id;
  return c / Complex(1, 1);
}

inline CMatrix conj_group(const RMatrix& g) {
  detail::require_square_even(g);
  const CMatrix c = cayley_matrix(g.rows() / 2);
  return c * g.cast<Complex>() * c.inverse();
}

// c g c^-1 is complex symplectic with blocks [[A, B], [conj B, conj A]].
inline bool conj_group_form(const RMatrix& g, const Tolerance& tol = {}) {
  detail::require_square_even(g);
  const Eigen::Index n = g.rows() / 2;
  const CMatrix m = conj_group(g);
  const double scale = detail::scale_of(m);
  const CMatrix a = m.topLeftCorner(n, n), b = m.topRightCorner(n, n);
  const bool shape = (m.bottomLeftCorner(n, n) - b.conjugate()).cwiseAbs().maxCoeff() < tol.eps() * scale &&
                     (m.bottomRightCorner(n, n) - a.conjugate()).cwiseAbs().maxCoeff() < tol.eps() * scale;
  const CMatrix j = real_symplectic_form(n).cast<Complex>();
  const bool symplectic = (m.transpose() * j * m - j).cwiseAbs().maxCoeff() < tol.eps() * scale * scale;
  return shape && symplectic;
}

// (M11 W + M12)(M21 W + M22)^-1
inline CMatrix conj_mobius(const CMatrix& m, const CMatrix& w) {
  const Eigen::Index n = w.rows();
  const CMatrix num = m.topLeftCorner(n, n) * w + m.topRightCorner(n, n);
  const CMatrix den = m.bottomLeftCorner(n, n) * w + m.bottomRightCorner(n, n);
  return detail::symmetrized(num * den.inverse());
}

}  // namespace poskit

#endif  // POSKIT_SIEGEL_HPP
