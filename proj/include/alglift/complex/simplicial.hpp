#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alglift/complex/chain_complex.hpp"
#include "alglift/error.hpp"

namespace alglift {

struct SimplicialInput {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> facets;
};

using Simplex = std::vector<std::size_t>;

/// Cells of every degree, each list sorted lexicographically; throws
/// MalformedInput on bad facets.
inline std::vector<std::vector<Simplex>> simplicial_cells(const SimplicialInput& s) {
  if (s.facets.empty()) throw Error(ErrorCode::MalformedInput, "no facets");
  std::vector<std::set<Simplex>> cells;
  for (const auto& facet : s.facets) {
    if (facet.empty()) throw Error(ErrorCode::MalformedInput, "empty facet");
    Simplex f = facet;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::MalformedInput, "repeated vertex in facet");
    if (f.back() >= s.vertices)
      throw Error(ErrorCode::MalformedInput, "vertex index " + std::to_string(f.back()) + " out of range");
    if (f.size() > 20) throw Error(ErrorCode::MalformedInput, "facet dimension too large");
    if (cells.size() < f.size()) cells.resize(f.size());
    // every nonempty subset is a face
    const std::size_t n = f.size();
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) face.push_back(f[i]);
      cells[face.size() - 1].insert(face);
    }
  }
  for (std::size_t v = 0; v < s.vertices; ++v) cells[0].insert(Simplex{v});
  std::vector<std::vector<Simplex>> out;
  for (const auto& level : cells) out.emplace_back(level.begin(), level.end());
  return out;
}

/*
 * Full simplicial chain complex generated by the facets. Cells of each degree
 * are vertex tuples in increasing order, sorted lexicographically;
 *   d[v_0 .. v_k] = sum_i (-1)^i [v_0 .. ^v_i .. v_k].
 * Vertices not used by any facet still appear as 0-cells.
 */
inline ChainComplex from_simplicial(const SimplicialInput& s) {
  auto cells = simplicial_cells(s);
  std::vector<std::size_t> dims;
  std::vector<std::map<Simplex, std::size_t>> index(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    dims.push_back(cells[k].size());
    for (std::size_t i = 0; i < cells[k].size(); ++i) index[k][cells[k][i]] = i;
  }
  std::vector<ZMatrix> boundaries;
  for (std::size_t k = 1; k < cells.size(); ++k) {
    ZMatrix d(dims[k - 1], dims[k]);
    for (std::size_t col = 0; col < cells[k].size(); ++col) {
      const Simplex& c = cells[k][col];
      for (std::size_t i = 0; i < c.size(); ++i) {
        Simplex face;
        for (std::size_t j = 0; j < c.size(); ++j)
          if (j != i) face.push_back(c[j]);
        d(index[k - 1].at(face), col) = (i % 2 == 0) ? 1 : -1;
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

}  // namespace alglift
