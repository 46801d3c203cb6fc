#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/plane_graph.hpp"

namespace kempe {

// Maximal connected 2-colored vertex set within a proper coloring. A chain
// may be a single vertex (short chain).
struct KempeChain {
  std::array<std::uint8_t, 2> colors;  // sorted pair {i, j}
  std::vector<int> vertices;           // sorted
  int anchor = -1;

  bool contains(int v) const;
};

// The maximal {i, j}-colored connected component containing v. Requires
// c(v) in {i, j} (ColorMismatch otherwise).
KempeChain chain_at(const Rotation& adj, const Coloring& c, int v,
                    std::array<std::uint8_t, 2> pair);

// Swaps the chain's two colors on its vertices; preserves properness.
Coloring interchange(const Coloring& c, const KempeChain& chain);

// True iff no i-j path joins the boundary vertices v and u of g, for a
// coloring with c(x) = c(y) = k and {i, j} disjoint from {k} (BadColors
// otherwise). Covers both blocking modes: the path may be cut inside the
// graph, or u (or v) may be forced to a color outside {i, j}.
bool two_color_path_blocked(const MarkedNearTriangulation& g, const Coloring& c,
                            std::array<std::uint8_t, 2> pair);

enum class LockVerdict { Locked, NotLocked, Vacuous };

// For a Locked edge: one identified coloring together with the three chains
// through both endpoints (for color pairs {k, j}, j != k ascending).
struct LockWitness {
  Coloring coloring;
  std::array<KempeChain, 3> chains;
};

struct LockAnalysis {
  LockVerdict verdict = LockVerdict::Vacuous;
  std::int64_t colorings_seen = 0;
  // NotLocked only: the first failing coloring and a chain containing x but
  // not y (interchanging it separates the endpoint colors).
  std::optional<Coloring> witness_coloring;
  std::optional<KempeChain> escaping_chain;
  // Locked with collect_witnesses only: all identified colorings + chains.
  std::vector<LockWitness> witnesses;
};

// The per-edge Kempe-locking decision: Locked iff identified colorings of
// G_xy exist and every one has all three {k, j} chains through both x and y.
// Enumeration stops at the first failing coloring.
LockAnalysis is_kempe_locked(const PlaneTriangulation& t, EdgeRef e,
                             bool collect_witnesses = false);

LockAnalysis is_kempe_locked(const MarkedNearTriangulation& gxy,
                             bool collect_witnesses = false);

}  // namespace kempe
