#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "kempe/errors.hpp"

namespace kempe {

// Vertices are dense integers 0..n-1. A rotation system stores, for each
// vertex, the cyclic sequence of its neighbors in one fixed orientation.
// Faces are the orbits of the successor map next(u->v) = (v, succ_v(u)).
using Rotation = std::vector<std::vector<int>>;

// Unordered vertex pair naming an edge of some graph.
struct EdgeRef {
  int a = -1;
  int b = -1;

  EdgeRef() = default;
  EdgeRef(int a_, int b_) : a(a_), b(b_) {}

  EdgeRef normalized() const { return a <= b ? EdgeRef{a, b} : EdgeRef{b, a}; }

  friend bool operator==(EdgeRef lhs, EdgeRef rhs) {
    lhs = lhs.normalized();
    rhs = rhs.normalized();
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
  friend auto operator<=>(EdgeRef lhs, EdgeRef rhs) {
    lhs = lhs.normalized();
    rhs = rhs.normalized();
    return std::pair(lhs.a, lhs.b) <=> std::pair(rhs.a, rhs.b);
  }
};

// Canonical byte string of a plane triangulation: equal codes <=> isomorphic
// graphs (plane triangulations on >= 4 vertices are 3-connected, so the
// embedding is unique up to reflection). The byte layout doubles as a
// planar_code record of the canonically relabeled graph, so a code can be
// decoded back into a triangulation.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& lhs, const CanonicalCode& rhs) {
    return lhs.bytes <=> rhs.bytes;
  }
};

// A minimal embedded plane graph: just a rotation system, no invariants.
// Used for surgery results that are not triangulations (e.g. configurations).
struct PlaneGraph {
  Rotation rotation;

  int order() const { return static_cast<int>(rotation.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  bool has_edge(int a, int b) const;
};

// Simple plane triangulation, validated on construction:
// simple, connected, E = 3n-6, every traced face a triangle (hence F = 2n-4
// and the Euler relation). Immutable; surgery returns new values.
class PlaneTriangulation {
 public:
  static PlaneTriangulation build(Rotation rotation);

  int order() const noexcept { return static_cast<int>(rot_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  const Rotation& rotation() const noexcept { return rot_; }
  const std::vector<int>& neighbors(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  bool has_edge(int a, int b) const;

  // Edges as normalized pairs, sorted.
  std::vector<EdgeRef> edges() const;

  // Traced triangular faces, each as the three vertices in walk order.
  std::vector<std::array<int, 3>> faces() const;

  // The apexes of the two triangles flanking edge e: {succ_b(a), succ_a(b)}.
  std::array<int, 2> flank_apexes(EdgeRef e) const;

 private:
  explicit PlaneTriangulation(Rotation rot, int edge_count)
      : rot_(std::move(rot)), edge_count_(edge_count) {}

  Rotation rot_;
  int edge_count_ = 0;
};

// Near-triangulation G_xy: all faces triangles except one quadrilateral,
// whose boundary cycle is (u, x, v, y) with x, y the deleted edge's endpoints.
// Vertex ids are those of the originating triangulation. {u, v} is an
// unordered pair semantically; the stored assignment is deterministic.
struct MarkedNearTriangulation {
  Rotation rotation;
  int u = -1;
  int x = -1;
  int v = -1;
  int y = -1;

  int order() const { return static_cast<int>(rotation.size()); }
  int degree(int w) const { return static_cast<int>(rotation[w].size()); }
  bool has_edge(int a, int b) const;
};

// --- construction and surgery ---

PlaneTriangulation build_triangulation(Rotation rotation);

// Deletes edge xy; the two flanking triangles merge into the marked 4-face.
MarkedNearTriangulation delete_edge(const PlaneTriangulation& t, EdgeRef e);

// Coalesces the endpoints of e into one vertex. Requires the endpoints'
// common neighbors to be exactly the two flank apexes and order >= 5;
// otherwise NotContractible. The deleted endpoint's id is compacted away
// (ids above it shift down by one).
PlaneTriangulation contract_edge(const PlaneTriangulation& t, EdgeRef e);

// Removes the boundary pair {u, v} of g (errors with WrongVertices for any
// other pair). Survivor ids are compacted preserving order. The result is the
// locking configuration K_xy drawn with one non-triangular outer face.
PlaneGraph delete_vertices(const MarkedNearTriangulation& g,
                           std::pair<int, int> vs);

// Re-inserts the deleted edge xy into the marked face; inverse of delete_edge.
PlaneTriangulation restore_deleted_edge(const MarkedNearTriangulation& g);

// Inserts the opposite diagonal uv into the marked face instead. This is the
// diagonal flip of the original edge; requires u, v non-adjacent.
PlaneTriangulation flip_diagonal(const MarkedNearTriangulation& g);

// --- canonical form ---

// Lexicographic minimum over all rooted, oriented BFS codes of the rotation
// system (2 orientations x each directed edge as root). Invariant under
// relabeling and reflection.
CanonicalCode canonical_code(const PlaneTriangulation& t);

struct CanonicalForm {
  CanonicalCode code;
  // The full automorphism group as vertex maps (including the identity and
  // orientation-reversing automorphisms).
  std::vector<std::vector<int>> automorphisms;
};

CanonicalForm canonical_form(const PlaneTriangulation& t);

// Rebuilds the triangulation a canonical code describes. Codes use the
// planar_code record layout: order byte, then per vertex its 1-based
// neighbor labels terminated by 0.
PlaneTriangulation decode_code(const CanonicalCode& code);

// Full BFS code bytes for a single rooted, oriented traversal of any
// rotation system. `labels_out`, if given, receives the 1-based BFS labels
// (0 for vertices the root cannot reach).
std::vector<std::uint8_t> rooted_code(const Rotation& rot, int root,
                                      int start_index, bool reversed,
                                      std::vector<int>* labels_out = nullptr);

// --- shared low-level helpers ---

// Face orbits of a rotation system, each face as its vertex walk.
std::vector<std::vector<int>> trace_faces(const Rotation& rot);

// Parses one code/planar_code record starting at bytes[0]; advances
// `consumed`. Throws TruncatedRecord / VertexOutOfRange.
Rotation rotation_from_record(std::span<const std::uint8_t> bytes,
                              std::size_t& consumed);

int index_in(const std::vector<int>& list, int value);  // -1 if absent

}  // namespace kempe
