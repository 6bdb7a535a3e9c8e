#ifndef POSKIT_RANDOM_HPP
#define POSKIT_RANDOM_HPP

#include "poskit/exactmat.hpp"

#include <cstdint>
#include <random>

namespace poskit {

// Seeded source of small rationals, integers and doubles. The mapping from
// engine output to values is done by hand so streams do not depend on the
// standard library's distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  // p/q with q in [1, max_den] and p/q in [lo, hi].
  Rational rational(long lo, long hi, long max_den = 6) {
    const long q = integer(1, max_den);
    const long p = integer(lo * q, hi * q);
    return Rational(Integer(p), Integer(q));
  }

  Rational nonzero_rational(long lo, long hi, long max_den = 6) {
    Rational r;
    do r = rational(lo, hi, max_den);
    while (r == 0);
    return r;
  }

  // Strictly positive rational in (0, hi].
  Rational positive_rational(long hi, long max_den = 6) {
    const long q = integer(1, max_den);
    const long p = integer(1, hi * q);
    return Rational(Integer(p), Integer(q));
  }

  double real(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  bool coin() { return (engine_() & 1u) != 0; }

  RatMatrix rational_matrix(std::size_t rows, std::size_t cols, long lo, long hi, long max_den = 6) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(lo, hi, max_den);
    return m;
  }

  RatMatrix symmetric_matrix(std::size_t n, long lo, long hi, long max_den = 6) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rational(lo, hi, max_den);
    return m;
  }

  RatMatrix unitriangular(std::size_t n, long lo, long hi, long max_den = 6) {
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rational(lo, hi, max_den);
    return m;
  }

  RatMatrix invertible_matrix(std::size_t n, long lo, long hi, long max_den = 6) {
    RatMatrix m;
    do m = rational_matrix(n, n, lo, hi, max_den);
    while (det(m) == 0);
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace poskit

#endif  // POSKIT_RANDOM_HPP
