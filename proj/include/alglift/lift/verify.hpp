#pragma once

#include "alglift/algebroid.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"
#include "alglift/lift/lift_result.hpp"

namespace alglift {

/*
 * Checks that lr is an integrable lift of lr.base:
 *   (i)   total is integrable, and the stored certificate agrees;
 *   (ii)  fiber_map has rank ell (onto);
 *   (iii) fiber_map carries total's monodromy generators onto base's;
 *   (iv)  kernel_basis has ell' - ell independent rows killed by fiber_map.
 * When both presentations carry cochains on the same complex, the fiber map
 * must also send the total curvature to the base curvature exactly.
 */
inline bool verify_lift(const LiftResult& lr) {
  try {
    const std::size_t ell = lr.base.ell(), ell_total = lr.total.ell();
    MonodromyReport fresh = is_discrete(lr.total.periods());
    if (!fresh.discrete || !lr.certificate.discrete) return false;
    if (lr.fiber_map.rows() != ell || lr.fiber_map.cols() != ell_total) return false;
    if (function_field_rank(lr.fiber_map) != ell) return false;
    if (!verify_morphism_functoriality(lr.total, lr.base, lr.fiber_map)) return false;
    if (lr.kernel_basis.rows() != ell_total - ell || lr.kernel_basis.cols() != ell_total) return false;
    if (function_field_rank(lr.kernel_basis) != ell_total - ell) return false;
    if (!poly_product(to_polynomial(lr.fiber_map), to_polynomial(lr.kernel_basis.transpose())).is_zero()) return false;

    const auto& bs = lr.base.source();
    const auto& ts = lr.total.source();
    if (bs && ts) {
      if (!(bs->complex == ts->complex)) return false;
      PMatrix image = poly_product(to_polynomial(ts->curvature.values), to_polynomial(lr.fiber_map.transpose()));
      if (!(image == to_polynomial(bs->curvature.values))) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace alglift
