#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "alglift/complex/chain_complex.hpp"
#include "alglift/complex/homology.hpp"
#include "alglift/error.hpp"
#include "alglift/exact/matrix.hpp"

namespace alglift {

/// K^ell-valued cochain: one row of values per cell of the given degree.
struct Cochain {
  std::size_t degree = 0;
  KMatrix values;

  std::size_t fiber_dim() const noexcept { return values.cols(); }

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

inline void check_shape(const ChainComplex& c, const Cochain& f) {
  if (f.degree > c.top()) throw Error(ErrorCode::DegreeOutOfRange, "cochain degree above top");
  if (f.values.rows() != c.dim(f.degree))
    throw Error(ErrorCode::ShapeMismatch, "cochain has " + std::to_string(f.values.rows()) +
                                              " values for " + std::to_string(c.dim(f.degree)) + " cells");
}

/// (df)(sigma) = f(d sigma).
inline Cochain coboundary(const ChainComplex& c, const Cochain& f) {
  check_shape(c, f);
  if (f.degree >= c.top())
    throw Error(ErrorCode::DegreeOutOfRange, "no cells above degree " + std::to_string(f.degree));
  return {f.degree + 1, c.boundary(f.degree + 1).transpose() * f.values};
}

inline bool is_closed(const ChainComplex& c, const Cochain& f) {
  check_shape(c, f);
  if (f.degree == c.top()) return true;
  return coboundary(c, f).values.is_zero();
}

/// Period matrix: row i is f evaluated on cycle i of h.
inline KMatrix periods(const ChainComplex& c, const Cochain& f, const HomologyResult& h) {
  if (f.degree != h.degree) throw Error(ErrorCode::DegreeMismatch, "cochain and homology degrees differ");
  if (!is_closed(c, f)) throw Error(ErrorCode::NotClosed, "cochain is not closed");
  return h.cycle_basis * f.values;
}

}  // namespace alglift

namespace alglift {

/*
 * Closed cochains dual to the cycle basis of h: an n_k x betti integer matrix
 * X whose columns are cocycles with cycle_basis * X = I. Integral solutions
 * exist because evaluation H^k(Z) -> Hom(H_k, Z) is onto; the SNF of the
 * cycle/cocycle pairing therefore has unit invariant factors.
 */
inline ZMatrix dual_cocycle_basis(const ChainComplex& c, const HomologyResult& h) {
  const std::size_t k = h.degree;
  if (k > c.top()) throw Error(ErrorCode::DegreeOutOfRange, "homology degree above top");
  if (h.cycle_basis.cols() != c.dim(k)) throw Error(ErrorCode::ShapeMismatch, "homology does not match complex");
  const std::size_t r = h.betti;
  ZMatrix cocycles = integer_left_kernel(c.boundary(k + 1));  // rows w with w * d_{k+1} = 0
  ZMatrix pairing = h.cycle_basis * cocycles.transpose();     // r x t
  SmithForm sf = snf(pairing);
  auto factors = sf.invariant_factors();
  if (factors.size() != r || !std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; }))
    throw Error(ErrorCode::ShapeMismatch, "cycle basis does not pair unimodularly with cocycles");
  // pairing = P^-1 [I 0] Q^-1  =>  Y = Q [P ; 0] solves pairing * Y = I
  ZMatrix top_block = stack(sf.u, ZMatrix(cocycles.rows() - r, r));
  ZMatrix y = sf.v * top_block;
  return cocycles.transpose() * y;
}

}  // namespace alglift
