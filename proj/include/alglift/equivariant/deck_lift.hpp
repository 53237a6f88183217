#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "alglift/algebroid.hpp"
#include "alglift/complex.hpp"
#include "alglift/equivariant/group_action.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"

namespace alglift {

/// A finite-dimensional space of closed scalar cochains on the cover,
/// given by a Q-independent basis.
class FormSubspace {
 public:
  FormSubspace() = default;

  FormSubspace(const ChainComplex& complex, std::size_t degree, std::vector<Cochain> basis)
      : degree_(degree), basis_(std::move(basis)) {
    for (const auto& f : basis_) {
      if (f.degree != degree_) throw Error(ErrorCode::DegreeMismatch, "basis forms have mixed degrees");
      if (f.fiber_dim() != 1) throw Error(ErrorCode::ShapeMismatch, "basis forms must be scalar");
      check_shape(complex, f);
      if (!is_closed(complex, f)) throw Error(ErrorCode::NotClosed, "basis form is not closed");
    }
    cells_ = complex.dim(degree_);
    if (flatten_rank_q(matrix().transpose()) != basis_.size())
      throw Error(ErrorCode::LinearlyDependent, "basis forms are linearly dependent");
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Cochain>& basis() const noexcept { return basis_; }

  /// cells x d matrix whose column j holds the values of basis form j.
  KMatrix matrix() const {
    KMatrix m(cells_, basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j)
      for (std::size_t c = 0; c < cells_; ++c) m(c, j) = basis_[j].values(c, 0);
    return m;
  }

  /// Rational coordinates of a scalar cochain in the basis, if it lies in the
  /// Q-span.
  std::optional<QMatrix> coordinates(const Cochain& f) const {
    KMatrix both = concat(matrix(), f.values);
    std::size_t span = symbol_span(both);
    QMatrix lhs = flatten(matrix().transpose(), span).transpose();
    QMatrix rhs = flatten(f.values.transpose(), span).transpose();
    return solve(lhs, rhs);
  }

 private:
  std::size_t degree_ = 0;
  std::size_t cells_ = 0;
  std::vector<Cochain> basis_;
};

/// d x d matrix of g_i on the subspace (column j = coordinates of g_i . phi_j),
/// or nullopt if the subspace is not invariant under g_i.
inline std::optional<QMatrix> coefficient_action(const GroupAction& a, const FormSubspace& e, std::size_t i) {
  QMatrix m(e.dimension(), e.dimension());
  for (std::size_t j = 0; j < e.dimension(); ++j) {
    auto x = e.coordinates(a.act(i, e.basis()[j]));
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < e.dimension(); ++k) m(k, j) = (*x)(k, 0);
  }
  return m;
}

/// Periods of the basis forms: entry (i, j) = integral of phi_j over cycle i.
inline KMatrix form_periods(const GroupAction& a, const FormSubspace& e, const HomologyResult& h) {
  if (h.degree != e.degree()) throw Error(ErrorCode::DegreeMismatch, "homology and forms differ in degree");
  if (h.cycle_basis.cols() != a.complex().dim(h.degree))
    throw Error(ErrorCode::ShapeMismatch, "homology was not computed on the acted-on complex");
  return h.cycle_basis * e.matrix();
}

/*
 * The two conditions on a subspace E of closed forms: E is invariant under
 * the group, and E -> H^2 is onto (the periods of the basis have rank
 * betti_2).
 */
inline bool check_assumptions(const GroupAction& a, const FormSubspace& e, const HomologyResult& h) {
  for (std::size_t i = 0; i < a.order(); ++i)
    if (!coefficient_action(a, e, i)) return false;
  return function_field_rank(form_periods(a, e, h)) == h.betti;
}

/// Tautological E*-valued form theta, <theta(c), phi_j> = phi_j(c).
inline Cochain tautological_form(const FormSubspace& e) { return {e.degree(), e.matrix()}; }

struct EquivariantCertificate {
  Cochain theta;           // cells x d
  KMatrix periods;         // r x d, rows are the monodromy generators
  MonodromyReport report;  // discreteness of the rows
};

/*
 * Monodromy of B^dR_theta on the cover. Surjectivity of E -> H^2 makes its
 * transpose injective, so the r generator rows are K-independent; r rows then
 * have free rank r = real span dimension.
 */
inline EquivariantCertificate equivariant_derham_certificate(const GroupAction& a, const FormSubspace& e,
                                                             const HomologyResult& h) {
  if (!check_assumptions(a, e, h))
    throw Error(ErrorCode::AssumptionsFailed, "form space is not invariant or does not surject onto H^2");
  EquivariantCertificate out;
  out.theta = tautological_form(e);
  out.periods = form_periods(a, e, h);
  out.report = is_discrete(out.periods);
  return out;
}

/*
 * Invariance of an E*-valued cochain under the twisted action
 *   (g . w)(c) = w(g^-1 c) composed with g^-1 acting on E,
 * i.e. values (g^-1)^T * w * M(g^-1), where M(g) is the matrix of g on E.
 */
inline bool check_equivariance(const GroupAction& a, const FormSubspace& e, const Cochain& w) {
  check_shape(a.complex(), w);
  if (w.fiber_dim() != e.dimension()) throw Error(ErrorCode::ShapeMismatch, "cochain values must lie in E*");
  for (std::size_t i = 0; i < a.order(); ++i) {
    std::size_t inv = a.inverse(i);
    auto m = coefficient_action(a, e, inv);
    if (!m) throw Error(ErrorCode::CoefficientActionUndefined, "E is not invariant under the group");
    KMatrix moved = a.act(i, w).values * *m;
    if (!(moved == w.values)) return false;
  }
  return true;
}

// Sections of Z^2 -> H^2 in the basis dual to h.cycle_basis, one closed
// scalar cochain per class, and E*-valued representatives of the de Rham
// element, are the same data: column i of Theta is S(c_i).

inline Cochain theta_from_section(const ChainComplex& c, const HomologyResult& h, const std::vector<Cochain>& section) {
  if (section.size() != h.betti) throw Error(ErrorCode::NotASection, "section needs one form per H^2 generator");
  KMatrix values(c.dim(h.degree), h.betti);
  for (std::size_t i = 0; i < section.size(); ++i) {
    const Cochain& s = section[i];
    if (s.fiber_dim() != 1) throw Error(ErrorCode::ShapeMismatch, "section forms must be scalar");
    KMatrix p = periods(c, s, h);
    for (std::size_t j = 0; j < h.betti; ++j)
      if (!(p(j, 0) == KNumber(i == j ? 1L : 0L))) throw Error(ErrorCode::NotASection, "periods are not dual");
    for (std::size_t cell = 0; cell < values.rows(); ++cell) values(cell, i) = s.values(cell, 0);
  }
  return {h.degree, values};
}

inline std::vector<Cochain> section_from_theta(const ChainComplex& c, const HomologyResult& h, const Cochain& theta) {
  if (theta.fiber_dim() != h.betti) throw Error(ErrorCode::ShapeMismatch, "theta must take values in H_2");
  if (!(periods(c, theta, h) == KMatrix(convert<KNumber>(ZMatrix::identity(h.betti)))))
    throw Error(ErrorCode::NotASection, "theta does not represent the de Rham element");
  std::vector<Cochain> out;
  for (std::size_t i = 0; i < h.betti; ++i) out.push_back({theta.degree, theta.values.col_block(i, 1)});
  return out;
}

/*
 * Equivariant section by averaging: S'(c) = (1/|G|) sum_g g . S(g^-1 . c).
 * In the dual basis, g^-1 . c_i = sum_k c_i(g z_k) c_k, and c_i(g z_k) is
 * read off the representative S(c_i).
 */
inline std::vector<Cochain> average_section(const GroupAction& a, const HomologyResult& h,
                                            const std::vector<Cochain>& section) {
  const ChainComplex& c = a.complex();
  theta_from_section(c, h, section);  // validates
  const std::size_t r = h.betti;
  std::vector<Cochain> out(r, Cochain{h.degree, KMatrix(c.dim(h.degree), 1)});
  for (std::size_t g = 0; g < a.order(); ++g) {
    ZMatrix moved = a.act_on_chains(g, h.degree, h.cycle_basis);  // row k = g z_k
    for (std::size_t i = 0; i < r; ++i) {
      KMatrix coeff = moved * section[i].values;  // r x 1, coefficients c_i(g z_k)
      Cochain pulled{h.degree, KMatrix(c.dim(h.degree), 1)};
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t cell = 0; cell < pulled.values.rows(); ++cell)
          pulled.values(cell, 0) += coeff(k, 0) * section[k].values(cell, 0);
      out[i].values = out[i].values + a.act(g, pulled).values;
    }
  }
  Rational inv(1, static_cast<unsigned long>(a.order()));
  for (auto& s : out)
    for (std::size_t cell = 0; cell < s.values.rows(); ++cell) s.values(cell, 0) *= inv;
  return out;
}

}  // namespace alglift
