#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kempe/plane_graph.hpp"

namespace kempe {

// Proper 4-coloring; colors are 1..4, indexed by vertex id.
struct Coloring {
  std::vector<std::uint8_t> assignment;

  std::uint8_t operator[](int v) const { return assignment[v]; }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

bool is_proper(const Rotation& adj, const Coloring& c);

// Color-class partition in canonical form: classes renumbered by first
// occurrence over vertex ids. Two colorings are distinct exactly when their
// keys differ.
std::vector<std::uint8_t> partition_key(const Coloring& c);

// Enumerates one representative per color-class partition of the proper
// 4-colorings of `adj`, optionally with the two vertices of `identify`
// forced to share a color (they must be non-adjacent). Symmetry is broken by
// first-use color numbering over a fixed order (identified/first vertex gets
// color 1). The visitor returns false to stop early.
void for_each_partition_coloring(
    const Rotation& adj, std::optional<std::pair<int, int>> identify,
    const std::function<bool(const Coloring&)>& visit);

// Identified enumeration for G_xy: every coloring has c(x) = c(y).
void for_each_identified_coloring(
    const MarkedNearTriangulation& g,
    const std::function<bool(const Coloring&)>& visit);

std::vector<Coloring> identified_colorings(const MarkedNearTriangulation& g);

std::int64_t count_distinct(const Rotation& adj,
                            std::optional<std::pair<int, int>> identify = {});
std::int64_t count_distinct(const PlaneTriangulation& t,
                            std::optional<std::pair<int, int>> identify = {});
std::int64_t count_distinct(const MarkedNearTriangulation& g,
                            std::optional<std::pair<int, int>> identify = {});

}  // namespace kempe
