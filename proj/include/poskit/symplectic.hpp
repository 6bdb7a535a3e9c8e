#ifndef POSKIT_SYMPLECTIC_HPP
#define POSKIT_SYMPLECTIC_HPP

#include "poskit/exactmat.hpp"

#include <vector>

namespace poskit {

// [[0, I], [-I, 0]]
inline RatMatrix symplectic_form(std::size_t n) {
  RatMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

// X^T J Y
inline RatMatrix omega(const RatMatrix& x, const RatMatrix& y) {
  return x.transpose() * symplectic_form(x.rows() / 2) * y;
}

inline bool is_lagrangian(const RatMatrix& basis) {
  if (basis.rows() != 2 * basis.cols() || basis.cols() == 0) return false;
  return rank(basis) == basis.cols() && omega(basis, basis).is_zero();
}

class Lagrangian {
 public:
  explicit Lagrangian(RatMatrix basis) : basis_(std::move(basis)) {
    if (!is_lagrangian(basis_)) throw DomainError("basis does not span a Lagrangian subspace");
  }
  std::size_t half_dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }

 private:
  RatMatrix basis_;
};

inline bool is_symplectic_matrix(const RatMatrix& g) {
  if (!g.square() || g.rows() % 2 != 0) return false;
  const RatMatrix j = symplectic_form(g.rows() / 2);
  return g.transpose() * j * g == j;
}

inline Lagrangian act(const RatMatrix& g, const Lagrangian& l) { return Lagrangian(g * l.basis()); }

inline bool intersects_trivially(const Lagrangian& a, const Lagrangian& b) {
  return rank(hconcat(a.basis(), b.basis())) == 2 * a.half_dim();
}

// (I N; 0 I), (I 0; M I) and diag(A, A^-T).
inline RatMatrix symplectic_upper(const RatMatrix& sym) {
  const std::size_t n = sym.rows();
  if (!is_symmetric(sym)) throw DomainError("symplectic_upper: block must be symmetric");
  RatMatrix g = RatMatrix::identity(2 * n);
  g.set_block(0, n, sym);
  return g;
}

inline RatMatrix symplectic_lower(const RatMatrix& sym) {
  const std::size_t n = sym.rows();
  if (!is_symmetric(sym)) throw DomainError("symplectic_lower: block must be symmetric");
  RatMatrix g = RatMatrix::identity(2 * n);
  g.set_block(n, 0, sym);
  return g;
}

inline RatMatrix symplectic_levi(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix g(2 * n, 2 * n);
  g.set_block(0, 0, a);
  g.set_block(n, n, inverse(a).transpose());
  return g;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long index() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// P with P^T Q P = diag(d).
struct Congruence {
  RatMatrix change;
  std::vector<Rational> diagonal;
};

// Lagrange reduction. A zero diagonal with a nonzero off-diagonal entry is
// handled by the shear e_i <- e_i + e_j, which splits off a hyperbolic plane.
inline Congruence diagonalize_congruence(const RatMatrix& q) {
  if (!is_symmetric(q)) throw DomainError("quadratic form must be symmetric");
  const std::size_t n = q.rows();
  RatMatrix a = q;
  RatMatrix p = RatMatrix::identity(n);
  auto swap_vectors = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a(r, i), a(r, j));
      std::swap(p(r, i), p(r, j));
    }
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  };
  // e_i <- e_i + f e_j
  auto add_vector = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t r = 0; r < n; ++r) {
      a(r, i) += f * a(r, j);
      p(r, i) += f * p(r, j);
    }
    for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a(i, j) != 0) {
            add_vector(i, j, 1);
            piv = i;
            found = true;
          }
      if (!found) break;
    }
    if (piv != k) swap_vectors(piv, k);
    for (std::size_t r = k + 1; r < n; ++r)
      if (a(r, k) != 0) add_vector(r, k, -a(r, k) / a(k, k));
  }
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
  return {std::move(p), std::move(d)};
}

inline Signature signature(const RatMatrix& q) {
  Signature s;
  for (const auto& x : diagonalize_congruence(q).diagonal) {
    if (x > 0) ++s.positive;
    else if (x < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

// Gram matrix of w(x1,x2) + w(x2,x3) + w(x3,x1) on L1 x L2 x L3, without the factor 1/2.
inline RatMatrix kashiwara_gram(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const std::size_t n = l1.half_dim();
  if (l2.half_dim() != n || l3.half_dim() != n) throw ShapeError("Lagrangians of different dimension");
  const RatMatrix m12 = omega(l1.basis(), l2.basis());
  const RatMatrix m23 = omega(l2.basis(), l3.basis());
  const RatMatrix m31 = omega(l3.basis(), l1.basis());
  RatMatrix g(3 * n, 3 * n);
  g.set_block(0, n, m12);
  g.set_block(0, 2 * n, m31.transpose());
  g.set_block(n, 0, m12.transpose());
  g.set_block(n, 2 * n, m23);
  g.set_block(2 * n, 0, m31);
  g.set_block(2 * n, n, m23.transpose());
  return g;
}

inline long maslov_index(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return signature(kashiwara_gram(l1, l2, l3)).index();
}

// S(x, y) = w(p13 x, p31 y) on L2, with p13 / p31 the projections for R^2n = L1 + L3.
inline RatMatrix transverse_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const std::size_t n = l1.half_dim();
  if (!intersects_trivially(l1, l3)) throw PreconditionError("maslov_transverse: L1 and L3 intersect");
  const RatMatrix coords = *solve(hconcat(l1.basis(), l3.basis()), l2.basis());
  const RatMatrix on_l1 = l1.basis() * coords.block(0, 0, n, n);
  const RatMatrix on_l3 = l3.basis() * coords.block(n, 0, n, n);
  const RatMatrix s = omega(on_l1, on_l3);
  return (s + s.transpose()) * Rational(1, 2);
}

inline long maslov_transverse(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return signature(transverse_form(l1, l2, l3)).index();
}

// Symplectic basis (p | q) with L1 = <p>, L2 = <q> and
// L3 = <p_i + epsilon_i * weight_i * q_i>, epsilon = +1 on the first k entries.
// weight_i is 1 whenever it can be absorbed by a rational rescaling.
struct NormalForm {
  RatMatrix basis;
  std::size_t k = 0;
  std::vector<int> epsilon;
  std::vector<Rational> weight;
};

namespace detail {
inline bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  const Integer a = numerator(x), b = denominator(x);
  const Integer ra = boost::multiprecision::sqrt(a), rb = boost::multiprecision::sqrt(b);
  if (ra * ra != a || rb * rb != b) return false;
  root = Rational(ra, rb);
  return true;
}
}  // namespace detail

inline NormalForm normal_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  const std::size_t n = l1.half_dim();
  if (!intersects_trivially(l1, l2) || !intersects_trivially(l2, l3) || !intersects_trivially(l1, l3))
    throw PreconditionError("normal_form: Lagrangians must be pairwise transverse");
  const auto cong = diagonalize_congruence(transverse_form(l1, l2, l3));
  // epsilon_i = -sign(d_i); negative d first so epsilon is non-increasing
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (cong.diagonal[i] < 0) order.push_back(i);
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cong.diagonal[i] > 0) order.push_back(i);

  const RatMatrix change = l2.basis() * cong.change;
  RatMatrix q(2 * n, n);
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.set_block(0, i, change.col(order[i]));
    d[i] = cong.diagonal[order[i]];
  }
  // p = L1-basis * C with w(p_i, q_j) = delta_ij
  const RatMatrix pairing = omega(l1.basis(), q);
  RatMatrix p = l1.basis() * inverse(pairing.transpose());

  NormalForm nf;
  nf.k = k;
  for (std::size_t i = 0; i < n; ++i) {
    nf.epsilon.push_back(i < k ? 1 : -1);
    Rational w = 1 / abs(d[i]);
    Rational s;
    if (detail::rational_sqrt(w, s)) {
      for (std::size_t r = 0; r < 2 * n; ++r) {
        p(r, i) /= s;
        q(r, i) *= s;
      }
      w = 1;
    }
    nf.weight.push_back(w);
  }
  nf.basis = hconcat(p, q);
  return nf;
}

// Lagrangian spanned by p_i + epsilon_i * weight_i * q_i.
inline Lagrangian normal_form_third(const NormalForm& nf) {
  const std::size_t n = nf.epsilon.size();
  RatMatrix b(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < 2 * n; ++r)
      b(r, i) = nf.basis(r, i) + nf.epsilon[i] * nf.weight[i] * nf.basis(r, n + i);
  return Lagrangian(std::move(b));
}

// tau(1,2,3) - [tau(1,2,4) + tau(2,3,4) + tau(3,1,4)]; the cocycle identity makes this 0.
inline long chain_rule_defect(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                              const Lagrangian& l4) {
  return maslov_index(l1, l2, l3) -
         (maslov_index(l1, l2, l4) + maslov_index(l2, l3, l4) + maslov_index(l3, l1, l4));
}

inline bool same_subspace(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t r = rank(a);
  return r == rank(b) && rank(hconcat(a, b)) == r;
}

}  // namespace poskit

#endif  // POSKIT_SYMPLECTIC_HPP
