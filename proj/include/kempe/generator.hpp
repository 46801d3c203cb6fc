#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kempe/plane_graph.hpp"

namespace kempe {

// Replaces v by an adjacent pair v, n sharing the neighbors a and b; the two
// arcs of v's rotation between a and b split between the new vertices. The
// inverse of contract_edge: contracting the new edge recovers the input. Any
// two distinct neighbors of v are valid (an empty arc yields a degree-3
// vertex, needed to reach stacked triangulations).
PlaneTriangulation split_vertex(const PlaneTriangulation& t, int v, int a,
                                int b);

struct GeneratorOptions {
  // Resource guard for built-in exhaustive generation; larger orders must be
  // ingested. The algorithm itself is complete at any order: every
  // triangulation on n >= 5 vertices arises from an order n-1 one by
  // split_vertex.
  int max_exhaustive_order = 15;
  int jobs = 1;
};

// Level-by-level exhaustive generation from K4 with canonical-code
// deduplication at every level. Levels are cached, so ascending queries
// share work; a level is stored as its sorted code set.
class ExhaustiveGenerator {
 public:
  explicit ExhaustiveGenerator(GeneratorOptions options = {});

  // One canonical code per isomorphism class of simple plane triangulations
  // of the given order, sorted. OrderTooLarge beyond the configured bound.
  const std::vector<CanonicalCode>& level(int order);

  const GeneratorOptions& options() const { return options_; }

 private:
  GeneratorOptions options_;
  std::vector<std::vector<CanonicalCode>> levels_;  // levels_[k] = order 4+k
};

// Exactly one representative per isomorphism class of order n passing the
// connectivity filter (minimum level; 3 accepts everything), in code order.
// The visitor returns false to stop.
void generate_all(int order, int min_connectivity, ExhaustiveGenerator& gen,
                  const std::function<bool(const PlaneTriangulation&)>& visit);

std::vector<PlaneTriangulation> generate_all(int order, int min_connectivity,
                                             ExhaustiveGenerator& gen);

// k pairwise non-isomorphic triangulations of order n from seeded random
// split walks (deduplicated by canonical code, resampling on collision).
// Identical seed, identical stream. The class distribution is not uniform.
// ExhaustedRetries when k distinct classes cannot be reached.
std::vector<PlaneTriangulation> sample_random(int order, int count,
                                              std::uint64_t seed);

}  // namespace kempe
