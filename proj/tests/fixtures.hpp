#pragma once

#include "kempe/plane_graph.hpp"

namespace kempe::fixtures {

inline PlaneTriangulation k4() {
  return build_triangulation({{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
}

// The unique order-5 triangulation (K4 with a vertex stacked into a face).
inline PlaneTriangulation stacked5() {
  return build_triangulation(
      {{1, 2, 4}, {2, 0, 4, 3}, {3, 4, 0, 1}, {1, 4, 2}, {2, 3, 1, 0}});
}

inline PlaneTriangulation octahedron() {
  return build_triangulation({{1, 2, 3, 4},
                              {0, 4, 5, 2},
                              {0, 1, 5, 3},
                              {0, 2, 5, 4},
                              {0, 3, 5, 1},
                              {1, 4, 3, 2}});
}

inline PlaneTriangulation icosahedron() {
  return build_triangulation({{1, 2, 3, 4, 5},
                              {0, 5, 10, 6, 2},
                              {0, 1, 6, 7, 3},
                              {0, 2, 7, 8, 4},
                              {0, 3, 8, 9, 5},
                              {0, 4, 9, 10, 1},
                              {1, 10, 11, 7, 2},
                              {2, 6, 11, 8, 3},
                              {3, 7, 11, 9, 4},
                              {4, 8, 11, 10, 5},
                              {5, 9, 11, 6, 1},
                              {6, 10, 9, 8, 7}});
}

// Vertex ids of the order-12 Kempe-locked triangulation fixture.
struct T12Ids {
  int x = 0, y = 1, u = 2, v = 3;
  int h2 = 4, h3 = 5, h5 = 6, h6 = 7;
  int d1 = 8, d2 = 9, d3 = 10, d4 = 11;
};

// Birkhoff diamond (ring x h2 h3 y h5 h6, central diamond d1..d4) plus a
// bottom vertex u over the x-h6-h5-y ring path, a top vertex v over
// x-h2-h3-y, and the edge xy through the remaining quad. Locked at xy.
inline PlaneTriangulation t12() {
  return build_triangulation({
      {3, 4, 8, 7, 2, 1},    // x : v h2 d1 h6 u y
      {10, 5, 3, 0, 2, 6},   // y : d3 h3 v x u h5
      {0, 7, 6, 1},          // u : x h6 h5 y
      {1, 5, 4, 0},          // v : y h3 h2 x
      {3, 5, 9, 8, 0},       // h2: v h3 d2 d1 x
      {4, 3, 1, 10, 9},      // h3: h2 v y d3 d2
      {7, 11, 10, 1, 2},     // h5: h6 d4 d3 y u
      {0, 8, 11, 6, 2},      // h6: x d1 d4 h5 u
      {0, 4, 9, 11, 7},      // d1: x h2 d2 d4 h6
      {4, 5, 10, 11, 8},     // d2: h2 h3 d3 d4 d1
      {9, 5, 1, 6, 11},      // d3: d2 h3 y h5 d4
      {8, 9, 10, 6, 7},      // d4: d1 d2 d3 h5 h6
  });
}

inline EdgeRef t12_locked_edge() { return {0, 1}; }

}  // namespace kempe::fixtures
