#ifndef POSKIT_LIEALG_HPP
#define POSKIT_LIEALG_HPP

#include "poskit/exactmat.hpp"
#include "poskit/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace poskit {

enum class Family { sl, sp, so };

// sl(n) with n = size; sp(2n) with n = half size; so(p,q) with p <= q.
struct LieAlgebraSpec {
  Family family = Family::sl;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  static LieAlgebraSpec sl(std::size_t n) {
    if (n < 2) throw DomainError("sl(n) needs n >= 2");
    return {Family::sl, n, 0, 0};
  }
  static LieAlgebraSpec sp(std::size_t half) {
    if (half < 1) throw DomainError("sp(2n) needs n >= 1");
    return {Family::sp, half, 0, 0};
  }
  static LieAlgebraSpec so(std::size_t p, std::size_t q) {
    if (p < 1 || p > q || p + q < 3) throw DomainError("so(p,q) needs 1 <= p <= q and p + q >= 3");
    return {Family::so, 0, p, q};
  }

  std::size_t matrix_size() const {
    switch (family) {
      case Family::sl: return n;
      case Family::sp: return 2 * n;
      case Family::so: return p + q;
    }
    return 0;
  }
  // dim a, which is also the length of the epsilon coordinates except for sl
  std::size_t real_rank() const {
    switch (family) {
      case Family::sl: return n - 1;
      case Family::sp: return n;
      case Family::so: return p;
    }
    return 0;
  }
  // number of epsilon functionals; for sl these sum to zero on a
  std::size_t epsilon_count() const { return family == Family::sl ? n : real_rank(); }

  std::string name() const {
    switch (family) {
      case Family::sl: return "sl(" + std::to_string(n) + ")";
      case Family::sp: return "sp(" + std::to_string(2 * n) + ")";
      case Family::so: return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return {};
  }
  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;
};

inline RatMatrix elementary(std::size_t size, std::size_t i, std::size_t j) {
  RatMatrix e(size, size);
  e(i, j) = 1;
  return e;
}

inline RatMatrix bracket(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

// [[0,0,W],[0,-I,0],[W^T,0,0]] with W(i, p+1-i) = (-1)^(p-i), 1-based.
inline RatMatrix form_Q(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  RatMatrix m(n, n);
  for (std::size_t i = 1; i <= p; ++i) {
    const Rational s = (p - i) % 2 == 0 ? 1 : -1;
    m(i - 1, n - i) = s;
    m(n - i, i - 1) = s;
  }
  for (std::size_t i = p; i < q; ++i) m(i, i) = -1;
  return m;
}

inline bool membership(const RatMatrix& x, const LieAlgebraSpec& spec) {
  const std::size_t size = spec.matrix_size();
  if (x.rows() != size || x.cols() != size) return false;
  switch (spec.family) {
    case Family::sl: return trace(x) == 0;
    case Family::sp: {
      const RatMatrix j = symplectic_form(spec.n);
      return (x.transpose() * j + j * x).is_zero();
    }
    case Family::so: {
      const RatMatrix qf = form_Q(spec.p, spec.q);
      return (x.transpose() * qf + qf * x).is_zero() && trace(x) == 0;
    }
  }
  return false;
}

// Fixed bases:
//   sl: E_ij (i != j, row-major order), then E_ii - E_{i+1,i+1}
//   sp: (E_ij, -E_ji) blocks, then upper symmetric blocks, then lower symmetric blocks
//   so: Q (E_ij - E_ji), i < j, since Q^2 = I makes so(Q) = Q * antisymmetric
inline std::vector<RatMatrix> lie_basis(const LieAlgebraSpec& spec) {
  const std::size_t size = spec.matrix_size();
  std::vector<RatMatrix> out;
  switch (spec.family) {
    case Family::sl:
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          if (i != j) out.push_back(elementary(size, i, j));
      for (std::size_t i = 0; i + 1 < size; ++i)
        out.push_back(elementary(size, i, i) - elementary(size, i + 1, i + 1));
      break;
    case Family::sp: {
      const std::size_t n = spec.n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(elementary(size, i, j) - elementary(size, n + j, n + i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          RatMatrix b = elementary(size, i, n + j);
          if (i != j) b += elementary(size, j, n + i);
          out.push_back(std::move(b));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          RatMatrix c = elementary(size, n + i, j);
          if (i != j) c += elementary(size, n + j, i);
          out.push_back(std::move(c));
        }
      break;
    }
    case Family::so: {
      const RatMatrix qf = form_Q(spec.p, spec.q);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
          out.push_back(qf * (elementary(size, i, j) - elementary(size, j, i)));
      break;
    }
  }
  return out;
}

inline std::size_t dim(const LieAlgebraSpec& spec) {
  const std::size_t size = spec.matrix_size();
  switch (spec.family) {
    case Family::sl: return size * size - 1;
    case Family::sp: return spec.n * (2 * spec.n + 1);
    case Family::so: return size * (size - 1) / 2;
  }
  return 0;
}

inline RatMatrix vectorize(const RatMatrix& x) {
  RatMatrix v(x.rows() * x.cols(), 1);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) v(i * x.cols() + j, 0) = x(i, j);
  return v;
}

// Coordinates in a list of linearly independent matrices.
class MatrixSpan {
 public:
  explicit MatrixSpan(std::vector<RatMatrix> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) return;
    const std::size_t entries = basis_[0].rows() * basis_[0].cols();
    RatMatrix stacked(entries, 0);
    for (const auto& b : basis_) stacked = hconcat(stacked, vectorize(b));
    RatMatrix t = stacked.transpose();
    rows_ = rref(t);
    if (rows_.size() != basis_.size()) throw DomainError("MatrixSpan: basis is linearly dependent");
    RatMatrix square(basis_.size(), basis_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < basis_.size(); ++c) square(r, c) = stacked(rows_[r], c);
    left_inverse_ = inverse(square);
  }

  const std::vector<RatMatrix>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  // Column of coordinates; throws when x is outside the span.
  RatMatrix coordinates(const RatMatrix& x) const {
    const RatMatrix v = vectorize(x);
    RatMatrix picked(rows_.size(), 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) picked(r, 0) = v(rows_[r], 0);
    RatMatrix c = left_inverse_ * picked;
    if (!(combine(c) == x)) throw DomainError("matrix lies outside the span");
    return c;
  }

  RatMatrix combine(const RatMatrix& coords) const {
    RatMatrix out(basis_.empty() ? 0 : basis_[0].rows(), basis_.empty() ? 0 : basis_[0].cols());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (coords(i, 0) != 0) out += basis_[i] * coords(i, 0);
    return out;
  }

 private:
  std::vector<RatMatrix> basis_;
  std::vector<std::size_t> rows_;
  RatMatrix left_inverse_;
};

class LieAlgebra {
 public:
  explicit LieAlgebra(const LieAlgebraSpec& spec) : spec_(spec), span_(lie_basis(spec)) {}

  const LieAlgebraSpec& spec() const { return spec_; }
  const std::vector<RatMatrix>& basis() const { return span_.basis(); }
  std::size_t dim() const { return span_.dim(); }
  bool contains(const RatMatrix& x) const { return membership(x, spec_); }
  RatMatrix coordinates(const RatMatrix& x) const { return span_.coordinates(x); }
  RatMatrix combine(const RatMatrix& coords) const { return span_.combine(coords); }

  // Matrix of ad(x) in the fixed basis.
  RatMatrix ad(const RatMatrix& x) const {
    if (!contains(x)) throw DomainError("ad: element not in " + spec_.name());
    RatMatrix out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) out.set_block(0, j, coordinates(bracket(x, basis()[j])));
    return out;
  }

 private:
  LieAlgebraSpec spec_;
  MatrixSpan span_;
};

inline Rational killing(const RatMatrix& x, const RatMatrix& y, const LieAlgebraSpec& spec) {
  if (!membership(x, spec) || !membership(y, spec)) throw DomainError("killing: arguments not in " + spec.name());
  const Rational tr = trace(x * y);
  switch (spec.family) {
    case Family::sl: return Rational(2 * spec.n) * tr;
    case Family::sp: return Rational(2 * spec.n + 2) * tr;
    case Family::so: return Rational(spec.p + spec.q - 2) * tr;
  }
  return 0;
}

inline Rational killing_via_ad(const RatMatrix& x, const RatMatrix& y, const LieAlgebra& g) {
  return trace(g.ad(x) * g.ad(y));
}

inline Rational killing_via_ad(const RatMatrix& x, const RatMatrix& y, const LieAlgebraSpec& spec) {
  return killing_via_ad(x, y, LieAlgebra(spec));
}

inline RatMatrix killing_gram(const std::vector<RatMatrix>& elems, const LieAlgebraSpec& spec) {
  RatMatrix g(elems.size(), elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) g(i, j) = killing(elems[i], elems[j], spec);
  return g;
}

inline RatMatrix cartan_involution(const RatMatrix& x) { return -x.transpose(); }

struct CartanParts {
  RatMatrix compact;      // antisymmetric part, in k
  RatMatrix noncompact;   // symmetric part, in p
};

inline CartanParts cartan_split(const RatMatrix& x, const LieAlgebraSpec& spec) {
  if (!membership(x, spec)) throw DomainError("cartan_split: element not in " + spec.name());
  const Rational half(1, 2);
  return {(x - x.transpose()) * half, (x + x.transpose()) * half};
}

// Basis of a maximal abelian subspace of p, made of diagonal matrices.
inline std::vector<RatMatrix> maximal_abelian(const LieAlgebraSpec& spec) {
  const std::size_t size = spec.matrix_size();
  std::vector<RatMatrix> out;
  switch (spec.family) {
    case Family::sl:
      for (std::size_t k = 0; k + 1 < size; ++k)
        out.push_back(elementary(size, k, k) - elementary(size, k + 1, k + 1));
      break;
    case Family::sp:
      for (std::size_t k = 0; k < spec.n; ++k)
        out.push_back(elementary(size, k, k) - elementary(size, spec.n + k, spec.n + k));
      break;
    case Family::so:
      for (std::size_t k = 0; k < spec.p; ++k)
        out.push_back(elementary(size, k, k) - elementary(size, size - 1 - k, size - 1 - k));
      break;
  }
  return out;
}

using RootCoeffs = std::vector<long>;

struct RestrictedRoot {
  RootCoeffs coeffs;
  std::size_t multiplicity = 0;
  std::vector<RatMatrix> space_basis;
};

struct RootDecomposition {
  LieAlgebraSpec spec;
  std::vector<RatMatrix> a_basis;
  std::vector<RatMatrix> zero_space_basis;  // Z_k(a)
  std::vector<RestrictedRoot> roots;
  std::vector<RestrictedRoot> simple;
  std::string dynkin;             // family convention, e.g. "B2", "D3", "C2"
  std::string dynkin_from_cartan; // canonical label read off the Cartan matrix
  RatMatrix a_killing_gram;       // Killing form on a_basis

  // values of an epsilon-combination on a_basis
  std::vector<Rational> evaluate(const RootCoeffs& c) const {
    std::vector<Rational> v(a_basis.size());
    for (std::size_t k = 0; k < a_basis.size(); ++k)
      for (std::size_t i = 0; i < c.size(); ++i) v[k] += c[i] * a_basis[k](i, i);
    return v;
  }

  // Killing-induced pairing on a*.
  Rational inner(const RootCoeffs& x, const RootCoeffs& y) const {
    const auto vx = evaluate(x), vy = evaluate(y);
    const RatMatrix g_inv = inverse(a_killing_gram);
    Rational s = 0;
    for (std::size_t i = 0; i < vx.size(); ++i)
      for (std::size_t j = 0; j < vy.size(); ++j) s += vx[i] * g_inv(i, j) * vy[j];
    return s;
  }

  const RestrictedRoot* find(const RootCoeffs& c) const {
    for (const auto& r : roots)
      if (r.coeffs == c) return &r;
    return nullptr;
  }

  std::size_t multiplicity(const RootCoeffs& c) const {
    const auto* r = find(c);
    return r ? r->multiplicity : 0;
  }

  // Coefficients of c in the simple roots (empty when c is not in their span).
  std::vector<Rational> simple_expansion(const RootCoeffs& c) const {
    const std::size_t len = spec.epsilon_count();
    RatMatrix s(len, simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j)
      for (std::size_t i = 0; i < len; ++i) s(i, j) = simple[j].coeffs[i];
    RatMatrix rhs(len, 1);
    for (std::size_t i = 0; i < len; ++i) rhs(i, 0) = c[i];
    const auto x = solve(s, rhs);
    if (!x) return {};
    std::vector<Rational> out(simple.size());
    for (std::size_t j = 0; j < simple.size(); ++j) out[j] = (*x)(j, 0);
    return out;
  }

  bool is_positive(const RootCoeffs& c) const {
    const auto e = simple_expansion(c);
    return !e.empty() && std::all_of(e.begin(), e.end(), [](const Rational& x) { return x >= 0; });
  }

  std::vector<RestrictedRoot> positive_roots() const {
    std::vector<RestrictedRoot> out;
    for (const auto& r : roots)
      if (is_positive(r.coeffs)) out.push_back(r);
    return out;
  }

  std::size_t dimension_total() const {
    std::size_t total = a_basis.size() + zero_space_basis.size();
    for (const auto& r : roots) total += r.multiplicity;
    return total;
  }
};

// <alpha, beta> := 2 (alpha, beta) / (alpha, alpha)
inline long cartan_integer(const RootCoeffs& alpha, const RootCoeffs& beta, const RootDecomposition& rd) {
  const Rational aa = rd.inner(alpha, alpha);
  if (aa == 0) throw DomainError("cartan_integer: alpha must be nonzero");
  const Rational v = 2 * rd.inner(alpha, beta) / aa;
  if (denominator(v) != 1) throw DomainError("cartan_integer: non-integral value " + to_string(v));
  return numerator(v).convert_to<long>();
}

namespace detail {

// Subspace of g given by coordinate columns, with the common eigenvalues seen so far.
struct WeightPiece {
  RatMatrix coords;  // dim g x m
  std::vector<Rational> values;
};

inline RootCoeffs epsilon_coefficients(const std::vector<Rational>& values, const LieAlgebraSpec& spec,
                                       const std::vector<RatMatrix>& a_basis) {
  const std::size_t len = spec.epsilon_count();
  const std::size_t rows = a_basis.size() + (spec.family == Family::sl ? 1 : 0);
  RatMatrix sys(rows, len);
  RatMatrix rhs(rows, 1);
  for (std::size_t k = 0; k < a_basis.size(); ++k) {
    for (std::size_t i = 0; i < len; ++i) sys(k, i) = a_basis[k](i, i);
    rhs(k, 0) = values[k];
  }
  if (spec.family == Family::sl)
    for (std::size_t i = 0; i < len; ++i) sys(rows - 1, i) = 1;
  const auto c = solve(sys, rhs);
  if (!c) throw DomainError("eigenvalue functional is not an epsilon combination");
  RootCoeffs out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (denominator((*c)(i, 0)) != 1) throw DomainError("non-integral epsilon coefficient");
    out[i] = numerator((*c)(i, 0)).convert_to<long>();
  }
  return out;
}

inline std::vector<RootCoeffs> conventional_simple_roots(const LieAlgebraSpec& spec) {
  const std::size_t len = spec.epsilon_count();
  std::vector<RootCoeffs> out;
  auto diff = [&](std::size_t i) {
    RootCoeffs c(len, 0);
    c[i] = 1;
    c[i + 1] = -1;
    return c;
  };
  switch (spec.family) {
    case Family::sl:
      for (std::size_t i = 0; i + 1 < len; ++i) out.push_back(diff(i));
      break;
    case Family::sp: {
      for (std::size_t i = 0; i + 1 < len; ++i) out.push_back(diff(i));
      RootCoeffs last(len, 0);
      last[len - 1] = 2;
      out.push_back(last);
      break;
    }
    case Family::so: {
      for (std::size_t i = 0; i + 1 < len; ++i) out.push_back(diff(i));
      RootCoeffs last(len, 0);
      last[len - 1] = 1;
      if (spec.p == spec.q) last[len - 2] = 1;
      out.push_back(last);
      break;
    }
  }
  return out;
}

inline std::string conventional_label(const LieAlgebraSpec& spec) {
  switch (spec.family) {
    case Family::sl: return "A" + std::to_string(spec.n - 1);
    case Family::sp: return "C" + std::to_string(spec.n);
    case Family::so: return (spec.p == spec.q ? "D" : "B") + std::to_string(spec.p);
  }
  return {};
}

// Identify low-rank coincidences: B1 = C1 = A1, C2 = B2, D3 = A3, D2 = A1 x A1.
inline std::string canonical_label(const std::string& label) {
  const char series = label[0];
  const int r = std::stoi(label.substr(1));
  if ((series == 'B' || series == 'C') && r == 1) return "A1";
  if (series == 'C' && r == 2) return "B2";
  if (series == 'D' && r == 3) return "A3";
  if (series == 'D' && r == 2) return "A1xA1";
  return label;
}

}  // namespace detail

// Label of the root system with the given Cartan matrix A(i,j) = <alpha_i, alpha_j>.
inline std::string classify_cartan(const std::vector<std::vector<long>>& a) {
  const std::size_t r = a.size();
  // connected components
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < r; ++w)
        if (w != v && a[v][w] != 0 && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t v = 0; v < r; ++v)
      if (comp[v] == c) nodes.push_back(v);
    const std::size_t k = nodes.size();
    std::string label;
    if (k == 1) {
      label = "A1";
    } else {
      std::size_t max_degree = 0;
      long max_bond = 1;
      std::size_t short_end = r, long_end = r;
      for (auto v : nodes) {
        std::size_t deg = 0;
        for (auto w : nodes) {
          if (w == v || a[v][w] == 0) continue;
          ++deg;
          const long bond = a[v][w] * a[w][v];
          if (bond > max_bond) max_bond = bond;
          if (bond == 2) {
            // |a[v][w]| = 1 means alpha_v is the longer root of the pair
            if (a[v][w] == -1) long_end = v;
            else short_end = v;
          }
        }
        max_degree = std::max(max_degree, deg);
      }
      if (max_bond == 3) {
        label = "G2";
      } else if (max_bond == 2) {
        if (k == 2) {
          label = "B2";
        } else {
          auto degree = [&](std::size_t v) {
            std::size_t d = 0;
            for (auto w : nodes)
              if (w != v && a[v][w] != 0) ++d;
            return d;
          };
          if (degree(short_end) == 1) label = "B" + std::to_string(k);
          else if (degree(long_end) == 1) label = "C" + std::to_string(k);
          else label = "F4";
        }
      } else if (max_degree >= 3) {
        std::size_t branch = r;
        for (auto v : nodes) {
          std::size_t d = 0;
          for (auto w : nodes)
            if (w != v && a[v][w] != 0) ++d;
          if (d == 3) branch = v;
        }
        // D_k when at least two arms at the branch have length 1
        std::size_t short_arms = 0;
        for (auto w : nodes) {
          if (w == branch || a[branch][w] == 0) continue;
          std::size_t d = 0;
          for (auto x : nodes)
            if (x != w && a[w][x] != 0) ++d;
          if (d == 1) ++short_arms;
        }
        label = (short_arms >= 2 ? "D" : "E") + std::to_string(k);
      } else {
        label = "A" + std::to_string(k);
      }
    }
    labels.push_back(detail::canonical_label(label));
  }
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "x") + l;
  return out;
}

inline RootDecomposition restricted_roots(const LieAlgebraSpec& spec) {
  const LieAlgebra g(spec);
  RootDecomposition rd;
  rd.spec = spec;
  rd.a_basis = maximal_abelian(spec);
  rd.a_killing_gram = killing_gram(rd.a_basis, spec);

  // Split g into joint eigenspaces of ad(a_k), one a_k at a time.
  std::vector<detail::WeightPiece> pieces{{RatMatrix::identity(g.dim()), {}}};
  for (const auto& a : rd.a_basis) {
    const RatMatrix ad_a = g.ad(a);
    std::set<Rational> candidates;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.rows(); ++j) candidates.insert(a(i, i) - a(j, j));
    std::vector<detail::WeightPiece> next;
    for (const auto& piece : pieces) {
      const RatMatrix restricted = *solve(piece.coords, ad_a * piece.coords);
      const std::size_t m = restricted.cols();
      std::size_t found = 0;
      for (const auto& lambda : candidates) {
        const auto ker = kernel(restricted - RatMatrix::identity(m) * lambda);
        if (ker.empty()) continue;
        found += ker.size();
        auto values = piece.values;
        values.push_back(lambda);
        next.push_back({piece.coords * from_columns(ker, m), std::move(values)});
      }
      if (found != m) throw DomainError("restricted_roots: ad(a) not diagonalizable over candidates");
    }
    pieces = std::move(next);
  }

  std::vector<RatMatrix> zero_space;
  for (const auto& piece : pieces) {
    std::vector<RatMatrix> space;
    for (std::size_t c = 0; c < piece.coords.cols(); ++c) space.push_back(g.combine(piece.coords.col(c)));
    const bool is_zero = std::all_of(piece.values.begin(), piece.values.end(), [](const Rational& x) { return x == 0; });
    if (is_zero) {
      zero_space = std::move(space);
      continue;
    }
    RestrictedRoot root;
    root.coeffs = detail::epsilon_coefficients(piece.values, spec, rd.a_basis);
    root.multiplicity = space.size();
    root.space_basis = std::move(space);
    rd.roots.push_back(std::move(root));
  }
  std::sort(rd.roots.begin(), rd.roots.end(),
            [](const RestrictedRoot& x, const RestrictedRoot& y) { return x.coeffs > y.coeffs; });

  // Z_k(a): antisymmetric elements of the zero weight space
  if (!zero_space.empty()) {
    const std::size_t size = spec.matrix_size();
    RatMatrix sym_map(size * size, zero_space.size());
    for (std::size_t c = 0; c < zero_space.size(); ++c)
      sym_map.set_block(0, c, vectorize(zero_space[c] + zero_space[c].transpose()));
    for (const auto& v : kernel(sym_map)) {
      RatMatrix x(size, size);
      for (std::size_t c = 0; c < zero_space.size(); ++c) x += zero_space[c] * v(c, 0);
      rd.zero_space_basis.push_back(std::move(x));
    }
  }

  for (const auto& c : detail::conventional_simple_roots(spec)) {
    const auto* r = rd.find(c);
    if (!r) throw DomainError("restricted_roots: conventional simple root is not a root");
    rd.simple.push_back(*r);
  }
  for (const auto& r : rd.roots) {
    const auto e = rd.simple_expansion(r.coeffs);
    if (e.empty()) throw DomainError("restricted_roots: root outside the span of the simple roots");
    const bool nonneg = std::all_of(e.begin(), e.end(), [](const Rational& x) { return x >= 0 && denominator(x) == 1; });
    const bool nonpos = std::all_of(e.begin(), e.end(), [](const Rational& x) { return x <= 0 && denominator(x) == 1; });
    if (!nonneg && !nonpos) throw DomainError("restricted_roots: simple roots do not form a base");
  }

  std::vector<std::vector<long>> cartan(rd.simple.size(), std::vector<long>(rd.simple.size()));
  for (std::size_t i = 0; i < rd.simple.size(); ++i)
    for (std::size_t j = 0; j < rd.simple.size(); ++j)
      cartan[i][j] = cartan_integer(rd.simple[i].coeffs, rd.simple[j].coeffs, rd);
  rd.dynkin_from_cartan = classify_cartan(cartan);
  rd.dynkin = detail::conventional_label(spec);
  if (detail::canonical_label(rd.dynkin) != rd.dynkin_from_cartan)
    throw DomainError("restricted_roots: Cartan matrix type " + rd.dynkin_from_cartan + " disagrees with " + rd.dynkin);
  return rd;
}

inline std::vector<RestrictedRoot> simple_roots(const LieAlgebraSpec& spec) { return restricted_roots(spec).simple; }
inline std::string dynkin_type(const LieAlgebraSpec& spec) { return restricted_roots(spec).dynkin; }

inline std::vector<std::vector<long>> cartan_matrix(const RootDecomposition& rd) {
  std::vector<std::vector<long>> c(rd.simple.size(), std::vector<long>(rd.simple.size()));
  for (std::size_t i = 0; i < rd.simple.size(); ++i)
    for (std::size_t j = 0; j < rd.simple.size(); ++j) c[i][j] = cartan_integer(rd.simple[i].coeffs, rd.simple[j].coeffs, rd);
  return c;
}

inline bool is_split(const RootDecomposition& rd) { return rd.zero_space_basis.empty(); }
inline bool is_split(const LieAlgebraSpec& spec) { return is_split(restricted_roots(spec)); }

// Basis of sl(3) for the Killing Gram matrix check: antisymmetric,
// symmetric, then diag(1,0,-1), diag(0,1,-1).
inline std::vector<RatMatrix> sl3_exercise_basis() {
  auto e = [](std::size_t i, std::size_t j) { return elementary(3, i - 1, j - 1); };
  return {e(1, 2) - e(2, 1), e(1, 3) - e(3, 1), e(2, 3) - e(3, 2), e(1, 2) + e(2, 1), e(1, 3) + e(3, 1),
          e(2, 3) + e(3, 2), e(1, 1) - e(3, 3),  e(2, 2) - e(3, 3)};
}

// Named generators of so(2,3) in the form Q_{2,3}.
struct So23Basis {
  RatMatrix e1, e2, e3, e4, f1, f2, f3, f4, h1, h2;
};

inline So23Basis so23_basis() {
  auto e = [](std::size_t i, std::size_t j) { return elementary(5, i - 1, j - 1); };
  So23Basis b;
  b.e1 = e(1, 2) + e(4, 5);
  b.e2 = e(2, 3) + e(3, 4);
  b.e3 = e(1, 3) - e(3, 5);
  b.e4 = e(1, 4) + e(2, 5);
  b.f1 = b.e1.transpose();
  b.f2 = b.e2.transpose();
  b.f3 = b.e3.transpose();
  b.f4 = b.e4.transpose();
  b.h1 = e(1, 1) - e(5, 5);
  b.h2 = e(2, 2) - e(4, 4);
  return b;
}

// Named generators of sp(4).
struct Sp4Basis {
  RatMatrix e1, e2, e3, e4, f1, f2, f3, f4;
};

inline Sp4Basis sp4_basis() {
  auto e = [](std::size_t i, std::size_t j) { return elementary(4, i - 1, j - 1); };
  Sp4Basis b;
  b.e1 = e(1, 2) - e(4, 3);
  b.e2 = e(1, 3);
  b.e3 = e(2, 4);
  b.e4 = e(1, 4) + e(2, 3);
  b.f1 = b.e1.transpose();
  b.f2 = b.e2.transpose();
  b.f3 = b.e3.transpose();
  b.f4 = b.e4.transpose();
  return b;
}

}  // namespace poskit

#endif  // POSKIT_LIEALG_HPP
