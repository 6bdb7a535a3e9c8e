#ifndef POSKIT_TOTPOS_HPP
#define POSKIT_TOTPOS_HPP

#include "poskit/exactmat.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace poskit {

// Word in the adjacent transpositions s_1..s_{n-1}.
struct ReducedWord {
  std::vector<std::size_t> letters;
  std::size_t n = 0;
};

struct TriFactorization {
  RatMatrix lower;  // unit lower triangular
  RatMatrix diag;   // positive diagonal
  RatMatrix upper;  // unit upper triangular
};

// Factors of (I N; 0 I)(I 0; M I) = V H W.
struct SymplecticFactorization {
  RatMatrix lower_unipotent;  // (I 0; M(I+NM)^-1 I)
  RatMatrix levi;             // diag(I+NM, I - M(I+NM)^-1 N)
  RatMatrix upper_unipotent;  // (I (I+NM)^-1 N; 0 I)
};

inline bool is_unitriangular_upper(const RatMatrix& u) {
  if (!u.square()) return false;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (u(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace detail {

template <typename Pred>
bool all_minors(const RatMatrix& m, Pred pred) {
  if (!m.square()) throw ShapeError("minor test on non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto sets = index_sets(n, k);
    for (const auto& rows : sets)
      for (const auto& cols : sets)
        if (!pred(minor(m, rows, cols))) return false;
  }
  return true;
}

// Minor (I, J) of an upper unitriangular matrix vanishes identically unless i_l <= j_l for all l.
inline bool forced_zero(const IndexSet& rows, const IndexSet& cols) {
  for (std::size_t l = 0; l < rows.size(); ++l)
    if (rows[l] > cols[l]) return true;
  return false;
}

}  // namespace detail

inline bool is_totally_positive(const RatMatrix& m) {
  return detail::all_minors(m, [](const Rational& x) { return x > 0; });
}

inline bool is_totally_nonnegative(const RatMatrix& m) {
  return detail::all_minors(m, [](const Rational& x) { return x >= 0; });
}

inline bool is_U_positive(const RatMatrix& u) {
  if (!is_unitriangular_upper(u)) throw DomainError("is_U_positive: not unit upper triangular");
  const std::size_t n = u.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    const auto sets = index_sets(n, k);
    for (const auto& rows : sets)
      for (const auto& cols : sets) {
        if (detail::forced_zero(rows, cols)) continue;
        if (minor(u, rows, cols) <= 0) return false;
      }
  }
  return true;
}

// I + t E_{i,i+1}, i 1-based.
inline RatMatrix generator_u(std::size_t i, const Rational& t, std::size_t n) {
  if (i < 1 || i + 1 > n) throw ShapeError("generator_u: index out of range");
  RatMatrix u = RatMatrix::identity(n);
  u(i - 1, i) = t;
  return u;
}

// Blocks (n-1, ..., 1), (n-1, ..., 2), ..., (n-1).
inline ReducedWord longest_word(std::size_t n) {
  if (n < 2) throw ShapeError("longest_word needs n >= 2");
  ReducedWord w{{}, n};
  for (std::size_t low = 1; low <= n - 1; ++low)
    for (std::size_t i = n - 1; i >= low; --i) w.letters.push_back(i);
  return w;
}

inline RatMatrix param_F(const ReducedWord& word, const std::vector<Rational>& params) {
  if (params.size() != word.letters.size()) throw ShapeError("param_F: parameter count differs from word length");
  RatMatrix out = RatMatrix::identity(word.n);
  for (std::size_t l = 0; l < params.size(); ++l) out = out * generator_u(word.letters[l], params[l], word.n);
  return out;
}

namespace detail {

// Bottom-up first-column elimination, then the next column, and so on.
// Returns the unit lower factor; `a` is left upper triangular.
inline RatMatrix eliminate_below(RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix lower = RatMatrix::identity(n);
  for (std::size_t c = 0; c + 1 < n; ++c) {
    for (std::size_t i = n - 1; i > c; --i) {
      if (a(i, c) == 0) continue;
      if (a(i - 1, c) == 0) throw PreconditionError("whitney_factorize: zero pivot");
      const Rational ratio = a(i, c) / a(i - 1, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= ratio * a(i - 1, j);
      // lower <- lower * (I + ratio E_{i,i-1})
      for (std::size_t r = 0; r < n; ++r) lower(r, i - 1) += lower(r, i) * ratio;
    }
  }
  return lower;
}

}  // namespace detail

inline TriFactorization whitney_factorize(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("whitney_factorize of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix rowreduced = m;
  RatMatrix lower = detail::eliminate_below(rowreduced);
  RatMatrix colreduced = rowreduced.transpose();
  RatMatrix upper_t = detail::eliminate_below(colreduced);
  RatMatrix diag(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (colreduced(i, i) <= 0) throw PreconditionError("whitney_factorize: non-positive pivot");
    diag(i, i) = colreduced(i, i);
  }
  return {std::move(lower), std::move(diag), upper_t.transpose()};
}

inline Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
  return out;
}

inline bool gk_spectrum_check(const RatMatrix& m, double tol = 1e-9) {
  if (!m.square()) throw ShapeError("gk_spectrum_check of non-square matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(m), false);
  if (solver.info() != Eigen::Success) return false;
  std::vector<std::complex<double>> ev(solver.eigenvalues().begin(), solver.eigenvalues().end());
  for (const auto& z : ev)
    if (std::abs(z.imag()) >= tol || z.real() <= tol) return false;
  std::vector<double> re;
  for (const auto& z : ev) re.push_back(z.real());
  std::sort(re.begin(), re.end());
  for (std::size_t i = 1; i < re.size(); ++i)
    if (re[i] - re[i - 1] <= tol) return false;
  return true;
}

inline bool sl2_positive(const RatMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2 || det(m) != 1) throw DomainError("sl2_positive: not in SL(2)");
  return m(0, 0) > 0 && m(0, 1) > 0 && m(1, 0) > 0 && m(1, 1) > 0;
}

// Leading principal minors all positive.
inline bool is_positive_definite(const RatMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (det(m.block(0, 0, k, k)) <= 0) return false;
  return true;
}

inline SymplecticFactorization sp_positive_factor(const RatMatrix& upper_block, const RatMatrix& lower_block) {
  const std::size_t n = upper_block.rows();
  if (!upper_block.square() || !lower_block.square() || lower_block.rows() != n)
    throw ShapeError("sp_positive_factor: blocks must be n x n");
  if (!is_positive_definite(upper_block) || !is_positive_definite(lower_block))
    throw PreconditionError("sp_positive_factor: blocks must be symmetric positive definite");
  const RatMatrix id = RatMatrix::identity(n);
  const RatMatrix p = id + upper_block * lower_block;
  RatMatrix p_inv;
  try {
    p_inv = inverse(p);
  } catch (const SingularMatrixError&) {
    throw PreconditionError("sp_positive_factor: I + NM singular");
  }
  RatMatrix v = RatMatrix::identity(2 * n);
  v.set_block(n, 0, lower_block * p_inv);
  RatMatrix h(2 * n, 2 * n);
  h.set_block(0, 0, p);
  h.set_block(n, n, id - lower_block * p_inv * upper_block);
  RatMatrix w = RatMatrix::identity(2 * n);
  w.set_block(0, n, p_inv * upper_block);
  return {std::move(v), std::move(h), std::move(w)};
}

}  // namespace poskit

#endif  // POSKIT_TOTPOS_HPP
