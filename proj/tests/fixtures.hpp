#pragma once

// Small complexes shared by the unit and acceptance suites.

#include <vector>

#include "alglift/complex.hpp"

namespace alglift::testing {

/// Boundary of the 3-simplex (a 2-sphere): 4 vertices, 4 triangles.
inline SimplicialInput tetra_boundary() {
  return {4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

inline SimplicialInput solid_tetra() { return {4, {{0, 1, 2, 3}}}; }

/// Minimal 7-vertex torus.
inline SimplicialInput torus7() {
  SimplicialInput s{7, {}};
  for (std::size_t i = 0; i < 7; ++i) {
    s.facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    s.facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return s;
}

/// 6-vertex real projective plane: H_1 = Z/2.
inline SimplicialInput rp2_6() {
  return {6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
              {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}};
}

/// Minimal cellular S^2 x S^2: one 0-cell, two 2-cells, one 4-cell, zero
/// differentials.
inline ChainComplex cellular_s2xs2() {
  return ChainComplex({1, 0, 2, 0, 1},
                      {ZMatrix(1, 0), ZMatrix(0, 2), ZMatrix(2, 0), ZMatrix(0, 1)});
}

/// Wedge of m two-spheres: one 0-cell, m 2-cells.
inline ChainComplex sphere_wedge(std::size_t m) {
  return ChainComplex({1, 0, m}, {ZMatrix(1, 0), ZMatrix(0, m)});
}

}  // namespace alglift::testing

#include "alglift/equivariant.hpp"

namespace alglift::testing {

/// Z/2 swapping the two 2-cells of cellular S^2 x S^2 (orientation of the
/// 4-cell is preserved).
inline GroupAction swap_s2xs2() {
  ChainComplex c = cellular_s2xs2();
  GroupAction::Element id = {ZMatrix::identity(1), ZMatrix(0, 0), ZMatrix::identity(2), ZMatrix(0, 0),
                             ZMatrix::identity(1)};
  GroupAction::Element swap = {ZMatrix::identity(1), ZMatrix(0, 0), ZMatrix{{0, 1}, {1, 0}}, ZMatrix(0, 0),
                               ZMatrix::identity(1)};
  return GroupAction(c, {id, swap}, {{0, 1}, {1, 0}});
}

/// Z/m cyclically permuting the spheres of a wedge of m two-spheres.
inline GroupAction cyclic_wedge(std::size_t m) {
  ChainComplex c = sphere_wedge(m);
  std::vector<GroupAction::Element> elements;
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < m; ++s) {
    ZMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i) p((i + s) % m, i) = 1;
    elements.push_back({ZMatrix::identity(1), ZMatrix(0, 0), p});
    for (std::size_t t = 0; t < m; ++t) table[s][t] = (s + t) % m;
  }
  return GroupAction(c, elements, table);
}

/// Z/2 by the even permutation (01)(23) on the tetrahedron boundary.
inline GroupAction z2_tetra() {
  return induced_action(tetra_boundary(), {{0, 1, 2, 3}, {1, 0, 3, 2}});
}

/// Z/3 rotating vertices 1 -> 2 -> 3 of the tetrahedron boundary.
inline GroupAction z3_tetra() {
  return induced_action(tetra_boundary(), {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}});
}

}  // namespace alglift::testing
