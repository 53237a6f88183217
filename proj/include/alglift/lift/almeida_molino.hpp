#pragma once

#include <cstddef>
#include <optional>

#include "alglift/algebroid.hpp"
#include "alglift/complex.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"
#include "alglift/lift/lift_result.hpp"

namespace alglift {

/*
 * Closed form of n(B). Row i of u * A vanishes iff row i of u is an integer
 * left-kernel vector of A. The left kernel L is saturated of rank k, so at
 * most k rows of a unimodular u can lie in it, and extend_to_unimodular
 * attains k by putting a basis of L in the last rows. Hence n = r - k.
 */
inline NOfBResult n_of_b(const AlgebroidPresentation& p) {
  NOfBResult out;
  ZMatrix kernel = saturated_left_kernel(p.periods());
  out.n = p.r() - kernel.rows();
  out.u = extend_to_unimodular(kernel, p.r());
  out.transformed_periods = out.u * p.periods();
  return out;
}

namespace detail {

// Re-expresses a cochain source in the H_2 basis u * cycle_basis.
inline std::optional<PresentationSource> change_basis(const std::optional<PresentationSource>& src,
                                                      const ZMatrix& u) {
  if (!src) return std::nullopt;
  PresentationSource out = *src;
  out.homology.cycle_basis = u * src->homology.cycle_basis;
  return out;
}

inline KMatrix sum_map(std::size_t ell, std::size_t copies) {
  KMatrix mu(ell, ell * copies);
  for (std::size_t b = 0; b < copies; ++b)
    for (std::size_t j = 0; j < ell; ++j) mu(j, b * ell + j) = 1;
  return mu;
}

}  // namespace detail

/*
 * Almeida-Molino integrable lift. In the basis realizing n(B) the curvature
 * splits as omega = sum_{i<n} phi_i (x) Theta_i, with phi_i closed and dual to
 * the new cycle basis. The lift uses
 *
 *   omega_bar = (phi_1 (x) Theta_1, ..., phi_n (x) Theta_n)  in (R^ell)^n,
 *
 * whose period matrix has row i equal to Theta_i placed in block i. The fiber
 * map is the sum mu of the n blocks.
 *
 * With a cochain source the exact remainder omega - sum phi_i (x) Theta_i is
 * folded into block 0, so mu(omega_bar) = omega holds on cochains, not only on
 * periods.
 */
inline LiftResult almeida_molino_lift(const AlgebroidPresentation& p) {
  if (!p.simply_connected()) throw Error(ErrorCode::NotSimplyConnected, "Almeida-Molino lift needs pi_1 = 0");
  if (p.periods().is_zero()) throw Error(ErrorCode::TrivialClass, "curvature class is trivial");

  NOfBResult nb = n_of_b(p);
  const std::size_t r = p.r(), ell = p.ell(), n = nb.n;
  const KMatrix& a = nb.transformed_periods;

  LiftResult out;
  out.kind = LiftKind::AlmeidaMolino;
  out.n = n;
  out.u = nb.u;
  out.degenerate = n == 1;
  out.base = AlgebroidPresentation(p.symbols(), a, true, detail::change_basis(p.source(), nb.u));

  KMatrix total(r, n * ell);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < ell; ++j) total(i, i * ell + j) = a(i, j);

  std::optional<PresentationSource> total_source;
  if (const auto& src = out.base.source()) {
    ZMatrix phi = dual_cocycle_basis(src->complex, src->homology);  // n_2 x r
    const KMatrix& omega = src->curvature.values;
    KMatrix values(omega.rows(), n * ell);
    KMatrix remainder = omega;
    for (std::size_t c = 0; c < omega.rows(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ell; ++j) {
          KNumber term = phi(c, i) * a(i, j);
          values(c, i * ell + j) += term;
          remainder(c, j) -= term;
        }
    for (std::size_t c = 0; c < omega.rows(); ++c)
      for (std::size_t j = 0; j < ell; ++j) values(c, j) += remainder(c, j);
    total_source = PresentationSource{src->complex, Cochain{2, values}, src->homology};
  }
  out.total = AlgebroidPresentation(p.symbols(), total, true, std::move(total_source));

  out.fiber_map = detail::sum_map(ell, n);
  out.kernel_basis = KMatrix(n == 0 ? 0 : (n - 1) * ell, n * ell);
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t j = 0; j < ell; ++j) {
      std::size_t row = (b - 1) * ell + j;
      out.kernel_basis(row, j) = 1;
      out.kernel_basis(row, b * ell + j) = -1;
    }
  out.certificate = is_discrete(out.total.periods());
  return out;
}

}  // namespace alglift
