#pragma once

#include "sheafbn/simplicial.hpp"

// The handful of named complexes every suite drives: the triangle circle, the
// tetrahedron boundary sphere, the 6-vertex projective plane, the 7-vertex
// torus, and a wedge of two triangle circles.
namespace fixtures {

inline sheafbn::SimplicialComplex circle() {
  return sheafbn::SimplicialComplex::from_maximal(3, {{0, 1}, {1, 2}, {0, 2}});
}

inline sheafbn::SimplicialComplex sphere() {
  return sheafbn::SimplicialComplex::from_maximal(
      4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Hemi-icosahedron: the star of vertex 0 over the 5-cycle (1,2,3,4,5) plus a
// Moebius band of 5 triangles on the chords.
inline sheafbn::SimplicialComplex projective_plane() {
  return sheafbn::SimplicialComplex::from_maximal(
      6, {{0, 1, 2},
          {0, 2, 3},
          {0, 3, 4},
          {0, 4, 5},
          {0, 1, 5},
          {1, 2, 4},
          {2, 3, 5},
          {1, 3, 4},
          {2, 4, 5},
          {1, 3, 5}});
}

// 7-vertex torus: orbits of {0,1,3} and {0,2,3} under the cyclic shift.
inline sheafbn::SimplicialComplex torus() {
  std::vector<sheafbn::Simplex> tris;
  for (int i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return sheafbn::SimplicialComplex::from_maximal(7, tris);
}

inline sheafbn::SimplicialComplex wedge() {
  return sheafbn::SimplicialComplex::from_maximal(
      5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

// Tetrahedron 1-skeleton with the single face {1,2,3} filled in. Its
// fundamental group is free of rank two, but unlike the wedge it carries a
// 2-simplex whose relator mixes distinct generators, which is what pins down
// the composition order of restriction maps for nonabelian monodromy.
inline sheafbn::SimplicialComplex filled_face() {
  return sheafbn::SimplicialComplex::from_maximal(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}});
}

}  // namespace fixtures
