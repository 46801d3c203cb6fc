#include "kempe/generator.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>
#include <unordered_set>

#include "kempe/connectivity.hpp"

namespace kempe {

PlaneTriangulation split_vertex(const PlaneTriangulation& t, int v, int a,
                                int b) {
  if (v < 0 || v >= t.order()) fail(Errc::InvalidSplit, "no such vertex");
  if (a == b) fail(Errc::InvalidSplit, "split neighbors must differ");
  const Rotation& rot = t.rotation();
  const int pa = index_in(rot[v], a);
  const int pb = index_in(rot[v], b);
  if (pa < 0 || pb < 0) {
    fail(Errc::InvalidSplit, "split vertices must neighbor v");
  }

  const int d = t.degree(v);
  std::vector<int> arc_a_to_b, arc_b_to_a;
  for (int i = (pa + 1) % d; i != pb; i = (i + 1) % d) {
    arc_a_to_b.push_back(rot[v][i]);
  }
  for (int i = (pb + 1) % d; i != pa; i = (i + 1) % d) {
    arc_b_to_a.push_back(rot[v][i]);
  }

  Rotation out = rot;
  const int v2 = t.order();
  out.emplace_back();
  // v keeps the a..b arc and gains v2; v2 takes the b..a arc.
  out[v] = {a};
  out[v].insert(out[v].end(), arc_a_to_b.begin(), arc_a_to_b.end());
  out[v].push_back(b);
  out[v].push_back(v2);
  out[v2] = {b};
  out[v2].insert(out[v2].end(), arc_b_to_a.begin(), arc_b_to_a.end());
  out[v2].push_back(a);
  out[v2].push_back(v);
  // a sees (v, v2) where it saw v; b sees (v2, v).
  out[a].insert(out[a].begin() + index_in(out[a], v) + 1, v2);
  {
    auto& list = out[b];
    list.insert(list.begin() + index_in(list, v), v2);
  }
  for (int w : arc_b_to_a) {
    out[w][index_in(out[w], v)] = v2;
  }
  return build_triangulation(std::move(out));
}

namespace {

Rotation k4_rotation() {
  return {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
}

// All child codes reachable from one parent by a single vertex split.
template <typename Sink>
void expand_parent(const PlaneTriangulation& parent, Sink&& sink) {
  for (int v = 0; v < parent.order(); ++v) {
    const auto& list = parent.neighbors(v);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        sink(canonical_code(split_vertex(parent, v, list[i], list[j])));
      }
    }
  }
}

struct CodeHash {
  std::size_t operator()(const std::vector<std::uint8_t>& bytes) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : bytes) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using CodeSet = std::unordered_set<std::vector<std::uint8_t>, CodeHash>;

}  // namespace

ExhaustiveGenerator::ExhaustiveGenerator(GeneratorOptions options)
    : options_(options) {
  levels_.push_back({canonical_code(build_triangulation(k4_rotation()))});
}

const std::vector<CanonicalCode>& ExhaustiveGenerator::level(int order) {
  if (order < 4) fail(Errc::OrderTooLarge, "order must be at least 4");
  if (order > options_.max_exhaustive_order) {
    fail(Errc::OrderTooLarge,
         "exhaustive generation is bounded at order " +
             std::to_string(options_.max_exhaustive_order) +
             "; ingest a planar_code corpus instead");
  }
  while (static_cast<int>(levels_.size()) <= order - 4) {
    const auto& parents = levels_.back();
    const int jobs =
        std::max(1, std::min<int>(options_.jobs,
                                  static_cast<int>(parents.size())));
    std::vector<CodeSet> partial(jobs);
    std::atomic<std::size_t> next{0};
    auto work = [&](int slot) {
      CodeSet& mine = partial[slot];
      while (true) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= parents.size()) break;
        PlaneTriangulation parent = decode_code(parents[idx]);
        expand_parent(parent, [&](CanonicalCode code) {
          mine.insert(std::move(code.bytes));
        });
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int s = 0; s < jobs; ++s) pool.emplace_back(work, s);
      for (auto& th : pool) th.join();
    }
    CodeSet merged = std::move(partial[0]);
    for (int s = 1; s < jobs; ++s) {
      merged.merge(partial[s]);
    }
    std::vector<CanonicalCode> next_level;
    next_level.reserve(merged.size());
    for (auto it = merged.begin(); it != merged.end();) {
      auto node = merged.extract(it++);
      next_level.push_back(CanonicalCode{std::move(node.value())});
    }
    std::sort(next_level.begin(), next_level.end());
    levels_.push_back(std::move(next_level));
  }
  return levels_[order - 4];
}

void generate_all(int order, int min_connectivity, ExhaustiveGenerator& gen,
                  const std::function<bool(const PlaneTriangulation&)>& visit) {
  for (const CanonicalCode& code : gen.level(order)) {
    PlaneTriangulation t = decode_code(code);
    if (min_connectivity > 3 && order >= 5 &&
        classify(t).level < min_connectivity) {
      continue;
    }
    if (min_connectivity > 3 && order == 4) continue;  // K4 is 3-connected
    if (!visit(t)) return;
  }
}

std::vector<PlaneTriangulation> generate_all(int order, int min_connectivity,
                                             ExhaustiveGenerator& gen) {
  std::vector<PlaneTriangulation> out;
  generate_all(order, min_connectivity, gen,
               [&](const PlaneTriangulation& t) {
                 out.push_back(t);
                 return true;
               });
  return out;
}

namespace {

// Unbiased draw from [0, bound) straight off the engine; the standard
// distributions are implementation-defined, which would break the
// same-seed-same-stream guarantee across standard libraries.
long draw(std::mt19937_64& rng, long bound) {
  const std::uint64_t span = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  while (true) {
    std::uint64_t r = rng();
    if (r < limit) return static_cast<long>(r % span);
  }
}

}  // namespace

std::vector<PlaneTriangulation> sample_random(int order, int count,
                                              std::uint64_t seed) {
  if (order < 4) fail(Errc::OrderTooLarge, "order must be at least 4");
  if (count < 1) fail(Errc::ExhaustedRetries, "count must be positive");
  std::mt19937_64 rng(seed);
  CodeSet seen;
  std::vector<PlaneTriangulation> out;
  const long max_attempts = 200L + 100L * count;
  long attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > max_attempts) {
      fail(Errc::ExhaustedRetries,
           "could not reach " + std::to_string(count) +
               " distinct classes after " + std::to_string(attempts - 1) +
               " walks");
    }
    PlaneTriangulation t = build_triangulation(k4_rotation());
    while (t.order() < order) {
      // Uniform over all (v, {a, b}) split choices of the current graph.
      long total = 0;
      for (int v = 0; v < t.order(); ++v) {
        long d = t.degree(v);
        total += d * (d - 1) / 2;
      }
      long pick = draw(rng, total);
      for (int v = 0; v < t.order(); ++v) {
        const long d = t.degree(v);
        const long here = d * (d - 1) / 2;
        if (pick >= here) {
          pick -= here;
          continue;
        }
        int i = 0;
        while (pick >= d - 1 - i) {
          pick -= d - 1 - i;
          ++i;
        }
        int j = i + 1 + static_cast<int>(pick);
        t = split_vertex(t, v, t.neighbors(v)[i], t.neighbors(v)[j]);
        break;
      }
    }
    CanonicalCode code = canonical_code(t);
    if (seen.insert(code.bytes).second) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace kempe
