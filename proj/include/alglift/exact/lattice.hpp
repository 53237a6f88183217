#pragma once

#include <algorithm>
#include <cstddef>

#include "alglift/error.hpp"
#include "alglift/exact/matrix.hpp"
#include "alglift/exact/normal_form.hpp"
#include "alglift/exact/polynomial.hpp"

namespace alglift {

/// Largest symbol span used by any entry (at least 1).
inline std::size_t symbol_span(const KMatrix& a) {
  std::size_t s = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& x : a.row(i)) s = std::max(s, x.span());
  return s;
}

/*
 * Writes each row of a in K^cols as a vector in Q^(cols * symbols): entry
 * (i, j) contributes its coefficient of symbol s at column j * symbols + s.
 * Since 1, s_1, ..., s_d are Q-linearly independent, integer relations among
 * rows of a are exactly integer relations among the flattened rows.
 */
inline QMatrix flatten(const KMatrix& a, std::size_t symbols) {
  QMatrix q(a.rows(), a.cols() * symbols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const auto& [s, c] : a(i, j).coeffs()) {
        if (s >= symbols) throw Error(ErrorCode::SymbolMismatch, "flatten: symbol outside span");
        q(i, j * symbols + s) = c;
      }
  return q;
}

inline QMatrix flatten(const KMatrix& a) { return flatten(a, symbol_span(a)); }

/// Dimension of the Q-span of the rows of a (= free rank of the group they
/// generate).
inline std::size_t flatten_rank_q(const KMatrix& a) { return rank(flatten(a)); }

/// Rank of a over Q(s_1, ..., s_d); the real rank for generic
/// (algebraically independent) values of the symbols.
inline std::size_t function_field_rank(const KMatrix& a) { return polynomial_rank(to_polynomial(a)); }

/// Z-basis of the saturated lattice {x in Z^rows : x * a = 0 in K}, in row
/// Hermite normal form.
inline ZMatrix saturated_left_kernel(const KMatrix& a) {
  if (a.rows() == 0) return ZMatrix(0, 0);
  return integer_left_kernel(clear_denominators(flatten(a)));
}

/// True iff the rows of k are independent and span a saturated sublattice.
inline bool is_saturated_basis(const ZMatrix& k) {
  SmithForm s = snf(k);
  auto f = s.invariant_factors();
  return f.size() == k.rows() && std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

/*
 * Completes the rows of k (a basis of a saturated sublattice of Z^n) to a
 * unimodular n x n matrix whose LAST k.rows() rows are exactly k.
 *
 * With u * k * v = [I | 0], the first s rows of v^-1 span the same lattice
 * as k, so the remaining rows of v^-1 complete k. The completing rows are put
 * in Hermite form for determinism.
 */
inline ZMatrix extend_to_unimodular(const ZMatrix& k, std::size_t n) {
  if (k.rows() != 0 && k.cols() != n) throw Error(ErrorCode::ShapeMismatch, "extend_to_unimodular: width");
  const std::size_t s = k.rows();
  if (s == 0) return ZMatrix::identity(n);
  SmithForm sf = snf(k);
  auto f = sf.invariant_factors();
  if (f.size() != s) throw Error(ErrorCode::NotABasis, "rows are linearly dependent");
  if (!std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; }))
    throw Error(ErrorCode::NotSaturated, "lattice is not saturated");
  ZMatrix w = unimodular_inverse(sf.v);
  ZMatrix complement = hnf_row(w.row_block(s, n - s)).h;
  return stack(complement, k);
}

inline ZMatrix extend_to_unimodular(const ZMatrix& k) { return extend_to_unimodular(k, k.cols()); }

}  // namespace alglift
