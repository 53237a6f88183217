#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "alglift/exact/knumber.hpp"
#include "alglift/exact/matrix.hpp"
#include "alglift/exact/rational.hpp"

namespace alglift {

/*
 * Sparse multivariate polynomial over Q in the symbols s_1..s_d.
 *
 * Monomials are exponent vectors with trailing zeros trimmed, so the
 * lexicographic order of std::vector coincides with the lex monomial order
 * s_1 > s_2 > ... . The leading term is the last map entry.
 *
 * Only what exact fraction-free elimination needs is provided: ring
 * operations and exact division.
 */
class Polynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  Polynomial(long c) { add_term({}, Rational(c)); }    // NOLINT(google-explicit-constructor)

  /// Degree-one embedding of K: symbol index i > 0 becomes the variable s_i.
  static Polynomial from_knumber(const KNumber& k) {
    Polynomial p;
    for (const auto& [i, q] : k.coeffs()) {
      Monomial m;
      if (i > 0) {
        m.assign(i, 0);
        m[i - 1] = 1;
      }
      p.add_term(m, q);
    }
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Inverse of from_knumber; returns false if the polynomial has degree > 1.
  bool to_knumber(KNumber& out) const {
    KNumber k;
    for (const auto& [m, q] : terms_) {
      if (m.empty()) {
        k.set(0, q);
        continue;
      }
      std::uint32_t total = 0;
      for (auto e : m) total += e;
      if (total != 1) return false;
      k.set(m.size(), q);  // trimmed: the single 1 is the last entry
    }
    out = k;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial c;
    for (const auto& [ma, qa] : a.terms_)
      for (const auto& [mb, qb] : b.terms_) c.add_term(mul(ma, mb), qa * qb);
    return c;
  }

  /// Exact division; throws std::logic_error when d does not divide *this.
  Polynomial exact_div(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial quotient;
    Polynomial rem = *this;
    const auto& [lm_d, lc_d] = *d.terms_.rbegin();
    while (!rem.is_zero()) {
      const auto& [lm_r, lc_r] = *rem.terms_.rbegin();
      Monomial m;
      if (!divides(lm_d, lm_r, m)) throw std::logic_error("inexact polynomial division");
      Polynomial t;
      t.add_term(m, lc_r / lc_d);
      quotient += t;
      rem -= t * d;
    }
    return quotient;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& q) {
    if (alglift::is_zero(q)) return;
    auto [it, inserted] = terms_.try_emplace(m, q);
    if (!inserted) {
      it->second += q;
      if (alglift::is_zero(it->second)) terms_.erase(it);
    }
  }

  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
  }

  static bool divides(const Monomial& d, const Monomial& n, Monomial& q) {
    if (d.size() > n.size()) return false;
    q = n;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > n[i]) return false;
      q[i] -= d[i];
    }
    trim(q);
    return true;
  }

  Terms terms_;
};

using PMatrix = Matrix<Polynomial>;

inline PMatrix to_polynomial(const KMatrix& a) {
  PMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = Polynomial::from_knumber(a(i, j));
  return p;
}

inline PMatrix poly_product(const PMatrix& a, const PMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "polynomial matrix product");
  PMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Rank over the rational function field Q(s_1, ..., s_d), by Bareiss
/// fraction-free elimination in the polynomial ring.
inline std::size_t polynomial_rank(PMatrix m) {
  Polynomial prev(1L);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)).exact_div(prev);
      m(i, col) = Polynomial();
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace alglift
