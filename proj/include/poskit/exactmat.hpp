#ifndef POSKIT_EXACTMAT_HPP
#define POSKIT_EXACTMAT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poskit {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Error kinds shared by every module.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularMatrixError : std::domain_error {
  using std::domain_error::domain_error;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline int sign(const Rational& x) { return x.sign(); }

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column_vector(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix left_cols(std::size_t k) const { return block(0, 0, rows_, k); }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T(0); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= T(-1); }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matmul: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

inline RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) { return a * b; }
inline RatMatrix transpose(const RatMatrix& a) { return a.transpose(); }

// [a | b]
template <typename T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw ShapeError("hconcat: row counts differ");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

template <typename T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw ShapeError("vconcat: column counts differ");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

template <typename T>
Matrix<T> diagonal(const std::vector<T>& d) {
  Matrix<T> m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <typename T>
T trace(const Matrix<T>& m) {
  if (!m.square()) throw ShapeError("trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Strictly increasing 1-based indices inside 1..ambient.
class IndexSet {
 public:
  IndexSet(std::vector<std::size_t> indices, std::size_t ambient)
      : indices_(std::move(indices)), ambient_(ambient) {
    for (std::size_t l = 0; l < indices_.size(); ++l) {
      if (indices_[l] < 1 || indices_[l] > ambient_) throw ShapeError("index out of range");
      if (l > 0 && indices_[l] <= indices_[l - 1]) throw ShapeError("indices not increasing");
    }
  }
  std::size_t size() const { return indices_.size(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t operator[](std::size_t l) const { return indices_[l]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t ambient_;
};

// All k-subsets of 1..n in lexicographic order.
inline std::vector<IndexSet> index_sets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t l = 0; l < k; ++l) cur[l] = l + 1;
  while (true) {
    out.emplace_back(cur, n);
    std::size_t l = k;
    while (l > 0 && cur[l - 1] == n - k + l) --l;
    if (l == 0) break;
    ++cur[l - 1];
    for (std::size_t m = l; m < k; ++m) cur[m] = cur[m - 1] + 1;
  }
  return out;
}

namespace detail {

// Bareiss elimination on the numerators after clearing each row's denominators.
// Returns the rank; the determinant is recovered by det() for square input.
struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;  // det of the scaled integer matrix when full rank
  int swap_sign = 1;
};

inline std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m, Rational& scale) {
  scale = 1;
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    scale /= Rational(l);
  }
  return rows;
}

inline BareissResult bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  BareissResult res;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      res.swap_sign = -res.swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace detail

// Fraction-free determinant.
inline Rational det(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("det of non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale;
  auto rows = detail::integer_rows(m, scale);
  auto res = detail::bareiss(rows, m.cols());
  if (res.rank < m.rows()) return 0;
  return Rational(res.last_pivot) * scale * res.swap_sign;
}

inline std::size_t rank(const RatMatrix& m) {
  Rational scale;
  auto rows = detail::integer_rows(m, scale);
  return detail::bareiss(rows, m.cols()).rank;
}

inline RatMatrix submatrix(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.ambient() != m.rows() || cols.ambient() != m.cols())
    throw ShapeError("index set ambient size does not match matrix");
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i] - 1, cols[j] - 1);
  return out;
}

inline Rational minor(const RatMatrix& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw ShapeError("minor: |I| != |J|");
  return det(submatrix(m, rows, cols));
}

// k-th compound matrix; index sets ordered lexicographically.
inline RatMatrix compound(const RatMatrix& m, std::size_t k) {
  if (!m.square()) throw ShapeError("compound of non-square matrix");
  if (k < 1 || k > m.rows()) throw ShapeError("compound: k out of range");
  const auto sets = index_sets(m.rows(), k);
  RatMatrix out(sets.size(), sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) out(a, b) = minor(m, sets[a], sets[b]);
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the null space, one column vector per free variable.
inline std::vector<RatMatrix> kernel(const RatMatrix& m) {
  RatMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatMatrix> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatMatrix v(m.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of A x = b (b may have several columns), or nullopt if inconsistent.
inline std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
  RatMatrix aug = hconcat(a, b);
  const auto pivots = rref(aug);
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug = hconcat(m, RatMatrix::identity(n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) throw SingularMatrixError("matrix is singular");
  return aug.block(0, n, n, n);
}

// Column vectors stacked side by side.
inline RatMatrix from_columns(const std::vector<RatMatrix>& cols, std::size_t rows) {
  RatMatrix out(rows, 0);
  for (const auto& c : cols) out = hconcat(out, c);
  return out;
}

inline bool is_symmetric(const RatMatrix& m) { return m.square() && m == m.transpose(); }

}  // namespace poskit

#endif  // POSKIT_EXACTMAT_HPP
