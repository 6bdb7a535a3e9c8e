#ifndef POSKIT_FLAGS_HPP
#define POSKIT_FLAGS_HPP

#include "poskit/exactmat.hpp"
#include "poskit/totpos.hpp"

#include <optional>
#include <vector>

namespace poskit {

// Complete flag; F_i is the span of the first i basis columns.
class Flag {
 public:
  explicit Flag(RatMatrix basis) : basis_(std::move(basis)) {
    if (!basis_.square()) throw ShapeError("flag basis must be square");
    if (det(basis_) == 0) throw DomainError("flag basis must be invertible");
  }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  RatMatrix span(std::size_t i) const { return basis_.left_cols(i); }

 private:
  RatMatrix basis_;
};

struct FlagTriple {
  Flag first, second, third;
};

inline Flag standard_ascending(std::size_t n) { return Flag(RatMatrix::identity(n)); }

inline Flag standard_descending(std::size_t n) {
  RatMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) b(n - 1 - j, j) = 1;
  return Flag(std::move(b));
}

namespace detail {
inline void same_dim(const Flag& a, const Flag& b) {
  if (a.dim() != b.dim()) throw ShapeError("flags live in different dimensions");
}
}  // namespace detail

// det [first a of x | first b of y | first c of z]
inline Rational wedge(const Flag& x, const Flag& y, const Flag& z, std::size_t a, std::size_t b, std::size_t c) {
  return det(hconcat(hconcat(x.span(a), y.span(b)), z.span(c)));
}

inline bool is_transverse(const Flag& f1, const Flag& f2) {
  detail::same_dim(f1, f2);
  const std::size_t n = f1.dim();
  for (std::size_t i = 1; i < n; ++i)
    if (rank(hconcat(f1.span(i), f2.span(n - i))) != n) return false;
  return true;
}

inline bool is_generic(const FlagTriple& t) {
  detail::same_dim(t.first, t.second);
  detail::same_dim(t.first, t.third);
  const std::size_t n = t.first.dim();
  for (std::size_t a = 0; a <= n; ++a)
    for (std::size_t b = 0; a + b <= n; ++b)
      if (wedge(t.first, t.second, t.third, a, b, n - a - b) == 0) return false;
  return true;
}

inline Flag act(const RatMatrix& g, const Flag& f) { return Flag(g * f.basis()); }

// The unit upper triangular u with u * standard_descending = t.
inline RatMatrix u_from_flag(const Flag& t) {
  const std::size_t n = t.dim();
  RatMatrix u = RatMatrix::identity(n);
  for (std::size_t j = n; j >= 1; --j) {
    // column j lies in T_{n-j+1}, vanishes below row j and has 1 in row j
    const std::size_t k = n - j + 1;
    RatMatrix sys = t.basis().block(j - 1, 0, k, k);
    RatMatrix rhs(k, 1);
    rhs(0, 0) = 1;
    if (det(sys) == 0) throw DomainError("u_from_flag: flag not transverse to the ascending flag");
    const RatMatrix coeff = *solve(sys, rhs);
    const RatMatrix column = t.span(k) * coeff;
    for (std::size_t i = 0; i < n; ++i) u(i, j - 1) = column(i, 0);
  }
  return u;
}

// c x c block in rows a+1..a+c, columns n-c+1..n.
inline RatMatrix block(const RatMatrix& u, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = u.rows();
  if (a + b + c != n) throw ShapeError("block: a + b + c must equal n");
  return u.block(a, n - c, c, c);
}

inline Rational triple_ratio(const Flag& x, const Flag& y, const Flag& z, std::size_t a, std::size_t b,
                             std::size_t c) {
  detail::same_dim(x, y);
  detail::same_dim(x, z);
  if (a < 1 || b < 1 || c < 1 || a + b + c != x.dim())
    throw ShapeError("triple_ratio: need a, b, c >= 1 with a + b + c = n");
  auto w = [&](std::size_t i, std::size_t j, std::size_t k) { return wedge(x, y, z, i, j, k); };
  const Rational num = w(a + 1, b, c - 1) * w(a, b - 1, c + 1) * w(a - 1, b + 1, c);
  const Rational den = w(a - 1, b, c + 1) * w(a, b + 1, c - 1) * w(a + 1, b - 1, c);
  if (den == 0) throw DomainError("triple_ratio: triple is not generic");
  return num / den;
}

inline bool is_BD_positive(const FlagTriple& t) {
  if (!is_generic(t)) return false;
  const std::size_t n = t.first.dim();
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; a + b < n; ++b)
      if (triple_ratio(t.first, t.second, t.third, a, b, n - a - b) <= 0) return false;
  return true;
}

// Basis v with <v_1..v_i> = third_i and <v_n..v_{n-i+1}> = first_i, so that
// g = v^-1 sends (first, third) to (descending, ascending).
inline RatMatrix adapted_basis(const Flag& first, const Flag& third) {
  const std::size_t n = first.dim();
  RatMatrix v(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const RatMatrix a = third.span(i);
    const RatMatrix b = first.span(n - i + 1);
    const auto ker = kernel(hconcat(a, -b));
    if (ker.size() != 1) throw DomainError("adapted_basis: flags are not transverse");
    const RatMatrix line = a * ker[0].block(0, 0, i, 1);
    for (std::size_t r = 0; r < n; ++r) v(r, i - 1) = line(r, 0);
  }
  return v;
}

// Sign pattern d (d_1 = +1) with d u d^-1 in U^{>0}, when one exists.
inline std::optional<std::vector<int>> positive_sign_pattern(const RatMatrix& u) {
  const std::size_t n = u.rows();
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<int> d(n, 1);
    for (std::size_t i = 1; i < n; ++i)
      if (mask & (1ul << (i - 1))) d[i] = -1;
    RatMatrix conj = u;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) conj(i, j) *= d[i] * d[j];
    if (is_U_positive(conj)) return d;
  }
  return std::nullopt;
}

struct GWWitness {
  RatMatrix u;
  std::vector<int> signs;
};

inline std::optional<GWWitness> gw_witness(const FlagTriple& t) {
  detail::same_dim(t.first, t.second);
  detail::same_dim(t.first, t.third);
  if (!is_transverse(t.first, t.third)) return std::nullopt;
  const RatMatrix g = inverse(adapted_basis(t.first, t.third));
  const Flag middle = act(g, t.second);
  if (!is_transverse(middle, standard_ascending(t.first.dim()))) return std::nullopt;
  RatMatrix u = u_from_flag(middle);
  auto signs = positive_sign_pattern(u);
  if (!signs) return std::nullopt;
  return GWWitness{std::move(u), std::move(*signs)};
}

inline bool is_GW_positive(const FlagTriple& t) { return gw_witness(t).has_value(); }

inline bool sign_lemma_check(const RatMatrix& u, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = u.rows();
  if (a + b + c != n) throw ShapeError("sign_lemma_check: a + b + c must equal n");
  const Flag t(u * standard_descending(n).basis());
  const Rational lhs = wedge(standard_ascending(n), standard_descending(n), t, a, b, c);
  const bool odd = ((b / 2) + (c / 2) + b * c) % 2 == 1;
  const Rational rhs = (odd ? -1 : 1) * det(block(u, a, b, c));
  return lhs == rhs;
}

}  // namespace poskit

#endif  // POSKIT_FLAGS_HPP
