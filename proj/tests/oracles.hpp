#pragma once

// Independent brute-force oracles the implementation is checked against.
// Everything here favors obviousness over speed and shares no code path with
// the machinery under test.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "kempe/birkhoff.hpp"
#include "kempe/plane_graph.hpp"

namespace kempe::oracles {

// Graph isomorphism by plain backtracking over vertex bijections with degree
// pruning. Ignores embeddings entirely.
bool isomorphic(const Rotation& a, const Rotation& b);

// Every isomorphism class of simple plane triangulations of the given order,
// produced independently of the split-based generator: closure of one
// stacked triangulation under diagonal flips (triangulations of equal order
// are flip-connected), deduplicated with the permutation iso test above.
std::vector<PlaneTriangulation> flip_closure_classes(int order);

// All distinct proper-4-coloring partitions over raw 4^n assignments,
// optionally with two vertices forced equal. Each partition in canonical
// first-use form.
std::set<std::vector<std::uint8_t>> brute_partitions(
    const Rotation& adj, std::optional<std::pair<int, int>> identify = {});

// Appearance search by backtracking over all injective maps in pattern
// vertex order 0..k-1, with the full checks applied at the leaves only.
// Deduplicated like the library: image set plus endpoint pair.
std::vector<Appearance> brute_appearances(const PlaneTriangulation& host,
                                          const Configuration& cfg,
                                          std::optional<EdgeRef> anchor = {});

// Vertex connectivity by deleting every subset of size < k.
bool is_k_connected(const Rotation& adj, int k);

}  // namespace kempe::oracles
