#pragma once

#include <cstddef>

#include "alglift/algebroid.hpp"

namespace alglift {

/*
 * n(B): the least number of nonzero rows of u * periods over u in GL_r(Z).
 * transformed_periods = u * periods has exactly its first n rows nonzero.
 */
struct NOfBResult {
  std::size_t n = 0;
  ZMatrix u;
  KMatrix transformed_periods;
};

enum class LiftKind { AlmeidaMolino, DeRham };

/*
 * An extension  0 -> K -> total --fiber_map--> base -> 0  of transitive
 * algebroids, recorded through periods. fiber_map is ell x ell'. For the
 * Almeida-Molino lift, base is the input re-expressed in the H_2 basis
 * changed by u; for the de Rham lift u is the identity.
 */
struct LiftResult {
  LiftKind kind = LiftKind::AlmeidaMolino;
  std::size_t n = 0;
  ZMatrix u;
  AlgebroidPresentation base;
  AlgebroidPresentation total;
  KMatrix fiber_map;
  KMatrix kernel_basis;
  MonodromyReport certificate;
  bool degenerate = false;

  friend bool operator==(const LiftResult&, const LiftResult&) = default;
};

}  // namespace alglift
