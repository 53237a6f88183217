#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "alglift/algebroid.hpp"
#include "alglift/complex.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"
#include "alglift/lift/lift_result.hpp"

namespace alglift {

/*
 * The de Rham algebroid of a complex: fiber H_2(M; R) = R^r and curvature the
 * tautological cochain Theta with  integral over cycle i of Theta = e_i.
 * Theta's columns are the integral cocycles dual to the cycle basis.
 */
inline std::pair<AlgebroidPresentation, Cochain> derham_presentation(const ChainComplex& c, const HomologyResult& h,
                                                                     bool simply_connected,
                                                                     SymbolBasis symbols = {}) {
  if (h.degree != 2) throw Error(ErrorCode::DegreeMismatch, "de Rham algebroid needs H_2");
  Cochain theta{2, convert<KNumber>(dual_cocycle_basis(c, h))};
  AlgebroidPresentation p(std::move(symbols), KMatrix(convert<KNumber>(ZMatrix::identity(h.betti))),
                          simply_connected, PresentationSource{c, theta, h});
  return {std::move(p), std::move(theta)};
}

/*
 * de Rham lift of B_omega: the algebroid of Theta (+) omega with fiber
 * R^r (+) R^ell, periods [I_r | A], mapped onto B_omega by the projection
 * p_V onto the last ell coordinates. The identity block makes the free rank
 * and the real span dimension both equal r, so the total is always
 * integrable.
 */
inline LiftResult derham_lift(const AlgebroidPresentation& p) {
  if (!p.simply_connected()) throw Error(ErrorCode::NotSimplyConnected, "de Rham lift needs pi_1 = 0");
  const std::size_t r = p.r(), ell = p.ell();

  LiftResult out;
  out.kind = LiftKind::DeRham;
  out.n = r;
  out.u = ZMatrix::identity(r);
  out.base = p;

  KMatrix total = concat(convert<KNumber>(ZMatrix::identity(r)), p.periods());
  std::optional<PresentationSource> total_source;
  if (const auto& src = p.source()) {
    KMatrix theta = convert<KNumber>(dual_cocycle_basis(src->complex, src->homology));
    total_source = PresentationSource{src->complex, Cochain{2, concat(theta, src->curvature.values)}, src->homology};
  }
  out.total = AlgebroidPresentation(p.symbols(), std::move(total), true, std::move(total_source));

  out.fiber_map = concat(KMatrix(ell, r), convert<KNumber>(ZMatrix::identity(ell)));
  out.kernel_basis = concat(convert<KNumber>(ZMatrix::identity(r)), KMatrix(r, ell));
  out.certificate = is_discrete(out.total.periods());
  return out;
}

}  // namespace alglift
