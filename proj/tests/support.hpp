#pragma once

// Shared generators and independent oracles for the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alglift/exact.hpp"

namespace alglift::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 4, long max_den = 3) {
    Rational q(integer(-bound, bound), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  /// Random element of K over symbols 1..symbols, each coefficient zero with
  /// probability `sparsity`.
  KNumber knumber(std::size_t symbols, double sparsity = 0.4) {
    KNumber k;
    for (std::size_t s = 0; s <= symbols; ++s)
      if (!coin(sparsity)) k.set(s, rational());
    return k;
  }

  KMatrix kmatrix(std::size_t rows, std::size_t cols, std::size_t symbols, double sparsity = 0.4) {
    KMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = knumber(symbols, sparsity);
    return m;
  }

  ZMatrix zmatrix(std::size_t rows, std::size_t cols, long bound = 5) {
    ZMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  /// Random unimodular matrix as a product of elementary operations.
  ZMatrix unimodular(std::size_t n, int steps = 12) {
    ZMatrix u = ZMatrix::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
      std::size_t a = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t b = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (b >= a) ++b;
      long q = integer(-2, 2);
      for (std::size_t j = 0; j < n; ++j) u(a, j) += q * u(b, j);
      if (coin(0.2)) u.swap_rows(a, b);
    }
    return u;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline SymbolBasis basis_with(std::size_t symbols) {
  SymbolBasis b;
  for (std::size_t s = 1; s <= symbols; ++s) b.add("x" + std::to_string(s));
  return b;
}

/// Oracle: rank over Q(s) estimated by evaluating symbols at several random
/// rational points and taking the maximal rational rank. Independent of the
/// polynomial elimination it checks.
inline std::size_t evaluated_rank(const KMatrix& a, std::uint64_t seed = 7, int trials = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1000, 1000000);
  std::size_t best = 0;
  std::size_t span = symbol_span(a);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> point(span, Rational(1));
    for (std::size_t s = 1; s < span; ++s) point[s] = Rational(dist(rng), dist(rng) | 1);
    QMatrix q(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& [s, c] : a(i, j).coeffs()) q(i, j) += c * point[s];
    best = std::max(best, rank(q));
  }
  return best;
}

/// Oracle: k-th determinantal divisor (gcd of all k x k minors), by brute
/// force over row and column subsets.
inline Integer determinantal_divisor(const ZMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  auto next = [](std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
      if (c[i] < n - k + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      ZMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
      g = gcd(g, determinant(sub));
    } while (next(cs, a.cols()));
  } while (next(rs, a.rows()));
  return g;
}

inline bool is_diagonal(const ZMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !is_zero(d(i, j))) return false;
  return true;
}

}  // namespace alglift::testing
