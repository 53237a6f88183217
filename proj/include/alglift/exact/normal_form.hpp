#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "alglift/error.hpp"
#include "alglift/exact/matrix.hpp"
#include "alglift/exact/rational.hpp"

namespace alglift {

/*
 * Integer normal forms and exact rational elimination.
 *
 * Pivot rule everywhere: smallest nonzero absolute value, ties broken by the
 * lowest row index and then the lowest column index. Outputs are therefore
 * deterministic.
 */

struct SmithForm {
  ZMatrix u;  // rows x rows, unimodular
  ZMatrix d;  // diagonal, d_1 | d_2 | ... , all >= 0
  ZMatrix v;  // cols x cols, unimodular

  /// Nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
      if (!is_zero(d(i, i))) out.push_back(d(i, i));
    return out;
  }
  std::size_t rank() const { return invariant_factors().size(); }
};

struct HermiteForm {
  ZMatrix h;  // row Hermite normal form of a
  ZMatrix u;  // unimodular with u * a = h
  std::size_t rank = 0;
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// row_dst -= q * row_src, applied to every matrix in the list
inline void row_axpy(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (is_zero(q)) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}
inline void col_axpy(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (is_zero(q)) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}
inline void negate_row(ZMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace detail

/// Row Hermite normal form: u * a = h with positive pivots, entries above
/// each pivot reduced into [0, pivot), zero rows last.
inline HermiteForm hnf_row(const ZMatrix& a) {
  HermiteForm out{a, ZMatrix::identity(a.rows()), 0};
  ZMatrix& h = out.h;
  ZMatrix& u = out.u;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < h.cols() && prow < h.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = prow; i < h.rows(); ++i) {
        if (is_zero(h(i, col))) continue;
        if (!best || abs(h(i, col)) < abs(h(*best, col))) best = i;
      }
      if (!best) break;
      h.swap_rows(prow, *best);
      u.swap_rows(prow, *best);
      bool done = true;
      for (std::size_t i = prow + 1; i < h.rows(); ++i) {
        if (is_zero(h(i, col))) continue;
        Integer q = detail::floor_div(h(i, col), h(prow, col));
        detail::row_axpy(h, i, prow, q);
        detail::row_axpy(u, i, prow, q);
        if (!is_zero(h(i, col))) done = false;
      }
      if (done) break;
    }
    if (is_zero(h(prow, col))) continue;
    if (sgn(h(prow, col)) < 0) {
      detail::negate_row(h, prow);
      detail::negate_row(u, prow);
    }
    for (std::size_t i = 0; i < prow; ++i) {
      Integer q = detail::floor_div(h(i, col), h(prow, col));
      detail::row_axpy(h, i, prow, q);
      detail::row_axpy(u, i, prow, q);
    }
    ++prow;
  }
  out.rank = prow;
  return out;
}

/// Smith normal form: u * a * v = d.
inline SmithForm snf(const ZMatrix& a) {
  SmithForm out{ZMatrix::identity(a.rows()), a, ZMatrix::identity(a.cols())};
  ZMatrix& d = out.d;
  ZMatrix& u = out.u;
  ZMatrix& v = out.v;
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (is_zero(d(i, j))) continue;
          if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = {i, j};
        }
      if (!best) return out;
      d.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      d.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (is_zero(d(i, t))) continue;
        Integer q = detail::floor_div(d(i, t), d(t, t));
        detail::row_axpy(d, i, t, q);
        detail::row_axpy(u, i, t, q);
        if (!is_zero(d(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (is_zero(d(t, j))) continue;
        Integer q = detail::floor_div(d(t, j), d(t, t));
        detail::col_axpy(d, j, t, q);
        detail::col_axpy(v, j, t, q);
        if (!is_zero(d(t, j))) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!is_zero(d(i, j)) && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      detail::row_axpy(d, t, *offender, Integer(-1));
      detail::row_axpy(u, t, *offender, Integer(-1));
    }
    if (sgn(d(t, t)) < 0) {
      detail::negate_row(d, t);
      detail::negate_row(u, t);
    }
  }
  return out;
}

/// Exact determinant of a square integer matrix (Bareiss).
inline Integer determinant(ZMatrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

inline bool is_unimodular(const ZMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer det = determinant(m);
  return det == 1 || det == -1;
}

struct EchelonForm {
  QMatrix r;                        // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over Q.
inline EchelonForm rref(QMatrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

/// Particular solution X of a * X = b with free variables set to zero.
inline std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "solve: row count mismatch");
  EchelonForm e = rref(concat(a, b));
  QMatrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= a.cols()) return std::nullopt;  // inconsistent
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.r(k, a.cols() + j);
  }
  return x;
}

/// Inverse of a square rational matrix; nullopt if singular.
inline std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, QMatrix::identity(a.rows()));
}

/// Inverse of a unimodular integer matrix.
inline ZMatrix unimodular_inverse(const ZMatrix& u) {
  auto inv = inverse(convert<Rational>(u));
  if (!inv) throw Error(ErrorCode::NotABasis, "matrix is singular");
  ZMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Rational& q = (*inv)(i, j);
      if (q.get_den() != 1) throw Error(ErrorCode::NotABasis, "matrix is not unimodular");
      out(i, j) = q.get_num();
    }
  return out;
}

/// Scales a rational matrix by the lcm of its denominators.
inline ZMatrix clear_denominators(const QMatrix& q) {
  Integer l = 1;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) l = lcm(l, q(i, j).get_den());
  ZMatrix z(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) z(i, j) = q(i, j).get_num() * (l / q(i, j).get_den());
  return z;
}

/// Z-basis (as rows) of {x in Z^rows : x * a = 0}; always saturated.
inline ZMatrix integer_left_kernel(const ZMatrix& a) {
  HermiteForm hf = hnf_row(a);
  std::size_t k = a.rows() - hf.rank;
  // u's trailing rows map onto the zero rows of h; put them in HNF so the
  // basis does not depend on elimination history.
  ZMatrix kernel = hf.u.row_block(hf.rank, k);
  return hnf_row(kernel).h;
}

}  // namespace alglift
