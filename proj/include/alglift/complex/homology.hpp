#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alglift/complex/chain_complex.hpp"
#include "alglift/error.hpp"
#include "alglift/exact/lattice.hpp"
#include "alglift/exact/normal_form.hpp"

namespace alglift {

struct HomologyResult {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
  ZMatrix cycle_basis;           // betti x n_degree, one cycle per row

  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

namespace detail {
inline void normalize_sign(ZMatrix& m, std::size_t row) {
  for (const auto& x : m.row(row)) {
    if (is_zero(x)) continue;
    if (sgn(x) < 0)
      for (auto& y : m.row(row)) y = -y;
    return;
  }
}
}  // namespace detail

/*
 * H_k = ker d_k / im d_{k+1}.
 *
 * The cycle lattice Z gets a saturated basis Zb (rows), the boundaries are
 * written in Zb-coordinates as an s x n_{k+1} matrix C, and SNF P*C*Q = D
 * splits Z into the torsion-carrying span and a free complement. The free
 * complement columns of P^-1, pushed through Zb, are the cycle basis.
 * Torsion classes never produce cycle_basis rows.
 */
inline HomologyResult homology(const ChainComplex& c, std::size_t k) {
  if (k > c.top())
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(k) + " exceeds top " + std::to_string(c.top()));
  const std::size_t n = c.dim(k);
  ZMatrix cycles = integer_left_kernel(c.boundary(k).transpose());
  const std::size_t s = cycles.rows();
  ZMatrix u = extend_to_unimodular(cycles, n);
  ZMatrix coords = unimodular_inverse(u).transpose() * c.boundary(k + 1);
  ZMatrix in_cycles = coords.row_block(n - s, s);

  SmithForm sf = snf(in_cycles);
  auto factors = sf.invariant_factors();
  HomologyResult out;
  out.degree = k;
  out.betti = s - factors.size();
  for (const auto& f : factors)
    if (f > 1) out.torsion.push_back(f);

  ZMatrix pinv = unimodular_inverse(sf.u);
  ZMatrix free_coords = pinv.col_block(factors.size(), out.betti).transpose();
  out.cycle_basis = free_coords * cycles;
  for (std::size_t i = 0; i < out.betti; ++i) detail::normalize_sign(out.cycle_basis, i);
  if (out.betti == 0) out.cycle_basis = ZMatrix(0, n);
  return out;
}

inline std::vector<HomologyResult> homology_all(const ChainComplex& c) {
  std::vector<HomologyResult> out;
  for (std::size_t k = 0; k <= c.top(); ++k) out.push_back(homology(c, k));
  return out;
}

}  // namespace alglift
