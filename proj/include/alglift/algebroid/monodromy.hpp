#pragma once

#include "alglift/algebroid/presentation.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"

namespace alglift {

/// Generators of the monodromy group: one row per H_2 basis cycle.
inline KMatrix monodromy_generators(const AlgebroidPresentation& p) {
  if (!p.simply_connected())
    throw Error(ErrorCode::NotSimplyConnected,
                "monodromy needs a simply connected base; use the deck-group cover instead");
  return p.periods();
}

inline MonodromyReport is_discrete(const KMatrix& gens) {
  MonodromyReport report;
  report.generators = gens;
  report.free_rank = flatten_rank_q(gens);
  report.real_span_dim = function_field_rank(gens);
  report.discrete = report.free_rank == report.real_span_dim;
  return report;
}

inline MonodromyReport is_integrable(const AlgebroidPresentation& p) { return is_discrete(monodromy_generators(p)); }

/// a * b with entries in K; throws SymbolProduct if an entry leaves K.
inline KMatrix exact_product(const KMatrix& a, const KMatrix& b) {
  PMatrix prod = poly_product(to_polynomial(a), to_polynomial(b));
  KMatrix out(prod.rows(), prod.cols());
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (!prod(i, j).to_knumber(out(i, j)))
        throw Error(ErrorCode::SymbolProduct, "product entry is not linear in the symbols");
  return out;
}

/*
 * Checks that the fiber map f : R^{ell_p} -> R^{ell_q} (an ell_q x ell_p
 * matrix) carries the monodromy generators of p onto those of q, i.e.
 * periods(p) * f^T = periods(q). The product is formed in the polynomial
 * ring, so symbolic entries in f are allowed.
 */
inline bool verify_morphism_functoriality(const AlgebroidPresentation& p, const AlgebroidPresentation& q,
                                          const KMatrix& f) {
  if (p.r() != q.r()) throw Error(ErrorCode::ShapeMismatch, "presentations have different rank r");
  if (f.rows() != q.ell() || f.cols() != p.ell())
    throw Error(ErrorCode::ShapeMismatch, "fiber map must be ell_q x ell_p");
  if (!(p.symbols() == q.symbols())) throw Error(ErrorCode::SymbolMismatch, "presentations use different symbols");
  if (symbol_span(f) > p.symbols().size()) throw Error(ErrorCode::SymbolMismatch, "fiber map uses undeclared symbols");
  PMatrix image = poly_product(to_polynomial(p.periods()), to_polynomial(f.transpose()));
  return image == to_polynomial(q.periods());
}

}  // namespace alglift
