#pragma once

#include <optional>
#include <vector>

#include "kempe/plane_graph.hpp"

namespace kempe {

// Near-triangulation drawn with one non-triangular outer face. The ring is
// that face's boundary walk; interior vertices have all their neighbors
// inside the configuration, so their pinned degree is their degree here.
struct Configuration {
  Rotation rotation;
  std::vector<int> ring;      // boundary walk (may repeat a vertex)
  std::vector<int> interior;  // ascending vertex ids
  int x = -1;                 // endpoints, members of the ring
  int y = -1;

  int order() const { return static_cast<int>(rotation.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int pinned_degree(int v) const { return degree(v); }
  bool is_interior(int v) const;
  bool has_edge(int a, int b) const;
};

// Builds a Configuration from an embedded plane graph with exactly one
// non-triangular face; x and y must lie on that face's boundary.
Configuration make_configuration(PlaneGraph g, int x, int y);

// The order-10 Birkhoff diamond: hexagonal ring r0..r5 with endpoints
// x = r0 and y = r3, around a central diamond of four degree-5 interior
// vertices d0..d3 (d1 d3 is the diamond's diagonal). Vertex ids are
// r0..r5 = 0..5, d0..d3 = 6..9.
const Configuration& birkhoff_diamond();

// An appearance maps configuration vertices injectively onto host vertices:
// every configuration edge lands on a host edge, and every interior vertex
// lands on a host vertex of exactly its pinned degree with its whole host
// neighborhood inside the image. Ring images may have arbitrary outside
// neighbors and extra host edges between them are permitted.
struct Appearance {
  std::vector<int> map;  // configuration vertex -> host vertex

  friend bool operator==(const Appearance&, const Appearance&) = default;
};

enum class AppearanceSemantics {
  // Edge-preserving injection + exact interior degrees + interior closed
  // neighborhoods inside the image.
  Configuration,
  // Plain subgraph embedding: edge-preserving injection only. Exposed for
  // sensitivity analysis.
  Subgraph,
};

// All appearances of cfg in the triangulation host, deduplicated by image
// plus endpoint assignment (the endpoint-swapping automorphism identifies
// equivalent appearances); deterministic order. With an anchor, only
// appearances mapping {cfg.x, cfg.y} onto the anchor pair survive.
std::vector<Appearance> find_appearances(
    const PlaneTriangulation& host, const Configuration& cfg,
    std::optional<EdgeRef> anchor = {},
    AppearanceSemantics semantics = AppearanceSemantics::Configuration);

// Appearance search inside a configuration host: pattern-interior vertices
// may only land on host-interior vertices (ring vertices have unknown
// outside neighborhoods).
std::vector<Appearance> find_appearances_in_configuration(
    const Configuration& host, const Configuration& pattern,
    bool anchor_endpoints,
    AppearanceSemantics semantics = AppearanceSemantics::Configuration);

// Specialized diamond search seeded on the central diagonal d1 d3: every
// host edge is tried as the diagonal image, its flank apexes as d0, d2, and
// the remainder extends deterministically. Equivalent to
// find_appearances(host, birkhoff_diamond(), anchor) and near-linear in
// practice.
std::vector<Appearance> find_diamond_appearances(
    const PlaneTriangulation& host, std::optional<EdgeRef> anchor = {});

// K_xy: delete edge e, then the boundary pair {u, v}. Requires
// is_kempe_locked(t, e) == Locked (NotLockedInput otherwise).
Configuration extract_locking_configuration(const PlaneTriangulation& t,
                                            EdgeRef e);

// False iff some strictly smaller catalog member has an endpoint-anchored
// appearance in k. Decides fundamentality relative to the catalog only.
bool is_fundamental(const Configuration& k,
                    const std::vector<Configuration>& catalog);

// Canonical byte string of an embedded configuration with endpoints pinned:
// equal codes <=> an embedding isomorphism (up to reflection) maps endpoints
// onto endpoints.
CanonicalCode configuration_code(const Configuration& cfg);

}  // namespace kempe
