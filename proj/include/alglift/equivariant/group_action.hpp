#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alglift/complex.hpp"
#include "alglift/error.hpp"
#include "alglift/exact.hpp"

namespace alglift {

/*
 * A finite group acting on a chain complex (the model of the universal
 * cover) by chain automorphisms. Element i carries one n_k x n_k integer
 * matrix per degree; element 0 is the identity. table[i][j] is the index of
 * g_i * g_j (apply g_j first).
 *
 * Cochains are acted on from the left by (g . f)(c) = f(g^-1 c).
 */
class GroupAction {
 public:
  using Element = std::vector<ZMatrix>;

  GroupAction() = default;

  GroupAction(ChainComplex complex, std::vector<Element> elements, std::vector<std::vector<std::size_t>> table)
      : complex_(std::move(complex)), elements_(std::move(elements)), table_(std::move(table)) {
    validate();
  }

  const ChainComplex& complex() const noexcept { return complex_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
  std::size_t inverse(std::size_t i) const { return inverse_.at(i); }

  /// g_i . f, values (g_i^-1)^T * f.
  Cochain act(std::size_t i, const Cochain& f) const {
    check_shape(complex_, f);
    return {f.degree, elements_[inverse_[i]][f.degree].transpose() * f.values};
  }

  /// g_i applied to chains given as rows (one chain per row).
  ZMatrix act_on_chains(std::size_t i, std::size_t degree, const ZMatrix& chains) const {
    return chains * elements_.at(i).at(degree).transpose();
  }

 private:
  [[noreturn]] static void fail(const std::string& why) { throw Error(ErrorCode::InvalidGroupAction, why); }

  void validate() {
    const std::size_t n = elements_.size();
    const std::size_t degrees = complex_.top() + 1;
    if (n == 0) fail("group has no elements");
    for (std::size_t i = 0; i < n; ++i) {
      if (elements_[i].size() != degrees) fail("element " + std::to_string(i) + " needs one matrix per degree");
      for (std::size_t k = 0; k < degrees; ++k) {
        const ZMatrix& g = elements_[i][k];
        if (g.rows() != complex_.dim(k) || g.cols() != complex_.dim(k))
          fail("element " + std::to_string(i) + " has a wrongly shaped matrix in degree " + std::to_string(k));
        if (!is_unimodular(g)) fail("element " + std::to_string(i) + " is not invertible over Z");
        if (k > 0 && !(elements_[i][k - 1] * complex_.boundary(k) == complex_.boundary(k) * g))
          fail("element " + std::to_string(i) + " is not a chain map");
      }
    }
    for (std::size_t k = 0; k < degrees; ++k)
      if (!(elements_[0][k] == ZMatrix::identity(complex_.dim(k)))) fail("element 0 must be the identity");
    if (table_.size() != n) fail("multiplication table has wrong size");
    for (const auto& row : table_) {
      if (row.size() != n) fail("multiplication table has wrong size");
      for (auto x : row)
        if (x >= n) fail("multiplication table entry out of range");
    }
    inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table_[0][i] != i || table_[i][0] != i) fail("element 0 is not a two-sided identity");
      for (std::size_t j = 0; j < n; ++j) {
        if (table_[i][j] == 0) {
          if (table_[j][i] != 0) fail("one-sided inverse in table");
          inverse_[i] = j;
        }
        for (std::size_t k = 0; k < n; ++k)
          if (table_[table_[i][j]][k] != table_[i][table_[j][k]]) fail("table is not associative");
        for (std::size_t d = 0; d < degrees; ++d)
          if (!(elements_[i][d] * elements_[j][d] == elements_[table_[i][j]][d]))
            fail("matrices do not follow the multiplication table");
      }
      if (inverse_[i] == n) fail("element " + std::to_string(i) + " has no inverse");
    }
  }

  ChainComplex complex_;
  std::vector<Element> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

/*
 * Action induced on the simplicial chain complex of s by vertex
 * permutations (perms[i][v] = image of v). perms[0] must be the identity and
 * the list must be closed under composition. An oriented simplex maps to the
 * sorted image simplex with the sign of the sorting permutation.
 */
inline GroupAction induced_action(const SimplicialInput& s, const std::vector<std::vector<std::size_t>>& perms) {
  ChainComplex complex = from_simplicial(s);
  auto cells = simplicial_cells(s);
  std::vector<std::map<Simplex, std::size_t>> index(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (std::size_t i = 0; i < cells[k].size(); ++i) index[k][cells[k][i]] = i;

  std::vector<GroupAction::Element> elements;
  for (const auto& p : perms) {
    if (p.size() != s.vertices) throw Error(ErrorCode::InvalidGroupAction, "permutation has wrong length");
    GroupAction::Element e;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      ZMatrix g(cells[k].size(), cells[k].size());
      for (std::size_t col = 0; col < cells[k].size(); ++col) {
        Simplex img;
        for (auto v : cells[k][col]) img.push_back(p.at(v));
        int sign = 1;
        for (std::size_t a = 0; a < img.size(); ++a)  // bubble sort, counting swaps
          for (std::size_t b = 0; b + 1 < img.size() - a; ++b)
            if (img[b] > img[b + 1]) {
              std::swap(img[b], img[b + 1]);
              sign = -sign;
            }
        auto it = index[k].find(img);
        if (it == index[k].end()) throw Error(ErrorCode::InvalidGroupAction, "permutation is not a simplicial map");
        g(it->second, col) = sign;
      }
      e.push_back(std::move(g));
    }
    elements.push_back(std::move(e));
  }
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> comp(s.vertices);
      for (std::size_t v = 0; v < s.vertices; ++v) comp[v] = perms[i][perms[j][v]];
      auto it = std::find(perms.begin(), perms.end(), comp);
      if (it == perms.end()) throw Error(ErrorCode::InvalidGroupAction, "permutations are not closed");
      table[i][j] = static_cast<std::size_t>(it - perms.begin());
    }
  return GroupAction(std::move(complex), std::move(elements), std::move(table));
}

/// Averages f over the group: (1/|G|) sum_g g . f.
inline Cochain average_cochain(const GroupAction& a, const Cochain& f) {
  Cochain sum{f.degree, KMatrix(f.values.rows(), f.values.cols())};
  for (std::size_t i = 0; i < a.order(); ++i) sum.values = sum.values + a.act(i, f).values;
  Rational inv(1, static_cast<unsigned long>(a.order()));
  for (std::size_t r = 0; r < sum.values.rows(); ++r)
    for (auto& x : sum.values.row(r)) x *= inv;
  return sum;
}

}  // namespace alglift
