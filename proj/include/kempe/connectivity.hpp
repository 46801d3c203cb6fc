#pragma once

#include <array>
#include <vector>

#include "kempe/plane_graph.hpp"

namespace kempe {

// Planar triangulations on >= 5 vertices are exactly 3-, 4- or 5-connected.
struct ConnectivityClass {
  int level = 0;  // 3, 4 or 5
  std::vector<std::array<int, 3>> separating_triangles;  // level 3 witnesses
  std::vector<std::array<int, 4>> separating_quads;      // level 4 witnesses
};

// The non-facial triangles of t; for a triangulation a triangle is
// separating exactly when it is not a face.
std::vector<std::array<int, 3>> separating_triangles(const PlaneTriangulation& t);

// All 4-cycles whose vertex removal disconnects t, as cycle tuples.
// Requires no separating triangle (PreconditionViolated otherwise).
std::vector<std::array<int, 4>> separating_quads(const PlaneTriangulation& t);

// Level 3 if a separating triangle exists, else 4 if a separating 4-cycle
// exists, else 5. TooSmall for n < 5.
ConnectivityClass classify(const PlaneTriangulation& t);

}  // namespace kempe
