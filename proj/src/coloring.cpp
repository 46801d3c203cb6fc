#include "kempe/coloring.hpp"

#include <algorithm>

namespace kempe {

bool is_proper(const Rotation& adj, const Coloring& c) {
  const int n = static_cast<int>(adj.size());
  if (static_cast<int>(c.assignment.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    if (c.assignment[v] < 1 || c.assignment[v] > 4) return false;
    for (int w : adj[v]) {
      if (c.assignment[v] == c.assignment[w]) return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> partition_key(const Coloring& c) {
  std::vector<std::uint8_t> key(c.assignment.size(), 0);
  std::uint8_t remap[5] = {0, 0, 0, 0, 0};
  std::uint8_t next = 1;
  for (std::size_t v = 0; v < c.assignment.size(); ++v) {
    std::uint8_t col = c.assignment[v];
    if (remap[col] == 0) remap[col] = next++;
    key[v] = remap[col];
  }
  return key;
}

namespace {

// Quotient of `adj` with `drop` merged into `keep` (they must be
// non-adjacent); `drop` keeps an empty slot so vertex ids are stable.
Rotation merge_pair(const Rotation& adj, int keep, int drop) {
  Rotation q = adj;
  for (int w : adj[drop]) {
    if (index_in(q[keep], w) < 0) q[keep].push_back(w);
  }
  q[drop].clear();
  for (std::size_t v = 0; v < q.size(); ++v) {
    if (static_cast<int>(v) == keep || static_cast<int>(v) == drop) continue;
    int j = index_in(q[v], drop);
    if (j >= 0) {
      if (index_in(q[v], keep) >= 0) {
        q[v].erase(q[v].begin() + j);
      } else {
        q[v][j] = keep;
      }
    }
  }
  return q;
}

}  // namespace

void for_each_partition_coloring(
    const Rotation& adj, std::optional<std::pair<int, int>> identify,
    const std::function<bool(const Coloring&)>& visit) {
  const int n = static_cast<int>(adj.size());
  int first = 0;
  int merged_away = -1;
  Rotation quotient;
  const Rotation* graph = &adj;
  if (identify) {
    auto [x, y] = *identify;
    if (index_in(adj[x], y) >= 0) return;  // identified endpoints adjacent
    quotient = merge_pair(adj, x, y);
    graph = &quotient;
    first = x;
    merged_away = y;
  }

  // Vertex order: the identified (or first) vertex, then descending degree.
  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v != first && v != merged_away) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (*graph)[a].size() > (*graph)[b].size();
  });
  order.insert(order.begin(), first);
  const int slots = static_cast<int>(order.size());

  std::vector<std::uint8_t> color(n, 0);
  Coloring out;
  out.assignment.assign(n, 0);
  bool stopped = false;

  // Backtracking with first-use color numbering: slot i may use at most one
  // color beyond those already in use, so each color-class partition is
  // produced exactly once.
  auto rec = [&](auto&& self, int idx, int used) -> void {
    if (stopped) return;
    if (idx == slots) {
      for (int v = 0; v < n; ++v) out.assignment[v] = color[v];
      if (merged_away >= 0) out.assignment[merged_away] = color[first];
      if (!visit(out)) stopped = true;
      return;
    }
    const int v = order[idx];
    unsigned forbidden = 0;
    for (int w : (*graph)[v]) {
      if (color[w]) forbidden |= 1u << color[w];
    }
    const int limit = std::min(4, used + 1);
    for (int col = 1; col <= limit; ++col) {
      if (forbidden & (1u << col)) continue;
      color[v] = static_cast<std::uint8_t>(col);
      self(self, idx + 1, std::max(used, col));
      color[v] = 0;
      if (stopped) return;
    }
  };
  rec(rec, 0, 0);
}

void for_each_identified_coloring(
    const MarkedNearTriangulation& g,
    const std::function<bool(const Coloring&)>& visit) {
  for_each_partition_coloring(g.rotation, std::pair{g.x, g.y}, visit);
}

std::vector<Coloring> identified_colorings(const MarkedNearTriangulation& g) {
  std::vector<Coloring> out;
  for_each_identified_coloring(g, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::int64_t count_distinct(const Rotation& adj,
                            std::optional<std::pair<int, int>> identify) {
  std::int64_t count = 0;
  for_each_partition_coloring(adj, identify, [&](const Coloring&) {
    ++count;
    return true;
  });
  return count;
}

std::int64_t count_distinct(const PlaneTriangulation& t,
                            std::optional<std::pair<int, int>> identify) {
  return count_distinct(t.rotation(), identify);
}

std::int64_t count_distinct(const MarkedNearTriangulation& g,
                            std::optional<std::pair<int, int>> identify) {
  return count_distinct(g.rotation, identify);
}

}  // namespace kempe
