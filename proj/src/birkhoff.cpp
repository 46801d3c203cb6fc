#include "kempe/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kempe/kempe.hpp"

namespace kempe {

bool Configuration::is_interior(int v) const {
  return std::binary_search(interior.begin(), interior.end(), v);
}

bool Configuration::has_edge(int a, int b) const {
  return index_in(rotation[a], b) >= 0;
}

Configuration make_configuration(PlaneGraph g, int x, int y) {
  Configuration cfg;
  cfg.rotation = std::move(g.rotation);
  const int n = cfg.order();

  std::vector<std::vector<int>> non_triangles;
  for (auto& walk : trace_faces(cfg.rotation)) {
    if (walk.size() != 3) non_triangles.push_back(std::move(walk));
  }
  if (non_triangles.size() != 1) {
    fail(Errc::NotTriangulation,
         "configuration needs exactly one non-triangular face, found " +
             std::to_string(non_triangles.size()));
  }
  cfg.ring = std::move(non_triangles.front());

  std::vector<char> on_ring(n, 0);
  for (int v : cfg.ring) on_ring[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (!on_ring[v]) cfg.interior.push_back(v);
  }
  if (!on_ring[x] || !on_ring[y]) {
    fail(Errc::WrongVertices, "endpoints must lie on the ring");
  }
  cfg.x = x;
  cfg.y = y;
  return cfg;
}

const Configuration& birkhoff_diamond() {
  static const Configuration diamond = [] {
    // Ring hexagon 0..5 (x = 0, y = 3), central diamond 6..9 with diagonal
    // 6-7-8-9 cycle plus chord 7-9; interior degrees all 5.
    Rotation rot = {
        {1, 6, 5},           // 0 = x
        {2, 7, 6, 0},        // 1
        {1, 3, 8, 7},        // 2
        {8, 2, 4},           // 3 = y
        {5, 9, 8, 3},        // 4
        {0, 6, 9, 4},        // 5
        {0, 1, 7, 9, 5},     // 6
        {1, 2, 8, 9, 6},     // 7
        {7, 2, 3, 4, 9},     // 8
        {6, 7, 8, 4, 5},     // 9
    };
    return make_configuration(PlaneGraph{std::move(rot)}, 0, 3);
  }();
  return diamond;
}

namespace {

// Host abstraction shared by triangulation and configuration hosts:
// `interior_degree[v]` is the degree a pattern-interior vertex mapped onto v
// must pin, or -1 when v cannot host an interior image.
struct HostView {
  const Rotation* adj;
  std::vector<int> interior_degree;

  int order() const { return static_cast<int>(adj->size()); }
  bool has_edge(int a, int b) const { return index_in((*adj)[a], b) >= 0; }
};

HostView view_of(const PlaneTriangulation& host) {
  HostView view{&host.rotation(), {}};
  view.interior_degree.resize(host.order());
  for (int v = 0; v < host.order(); ++v) {
    view.interior_degree[v] = host.degree(v);
  }
  return view;
}

HostView view_of(const Configuration& host) {
  HostView view{&host.rotation, {}};
  view.interior_degree.assign(host.order(), -1);
  for (int v : host.interior) view.interior_degree[v] = host.degree(v);
  return view;
}

using DedupKey = std::pair<std::vector<int>, std::pair<int, int>>;

DedupKey dedup_key(const Configuration& cfg, const std::vector<int>& map) {
  std::vector<int> image = map;
  std::sort(image.begin(), image.end());
  int ex = map[cfg.x], ey = map[cfg.y];
  return {std::move(image), {std::min(ex, ey), std::max(ex, ey)}};
}

void keep_min(std::map<DedupKey, std::vector<int>>& found,
              const Configuration& cfg, const std::vector<int>& map) {
  auto key = dedup_key(cfg, map);
  auto it = found.find(key);
  if (it == found.end()) {
    found.emplace(std::move(key), map);
  } else if (map < it->second) {
    it->second = map;
  }
}

std::vector<Appearance> collect(std::map<DedupKey, std::vector<int>>&& found) {
  std::vector<Appearance> out;
  out.reserve(found.size());
  for (auto& [key, map] : found) out.push_back(Appearance{std::move(map)});
  std::sort(out.begin(), out.end(),
            [](const Appearance& a, const Appearance& b) { return a.map < b.map; });
  return out;
}

// Backtracking matcher over a fixed pattern vertex order (pattern.x first,
// then greedily by number of already-ordered neighbors).
std::vector<Appearance> match(const HostView& host, const Configuration& cfg,
                              std::optional<EdgeRef> anchor,
                              AppearanceSemantics semantics) {
  const int pn = cfg.order();
  std::vector<int> order;
  {
    std::vector<char> placed(pn, 0);
    order.push_back(cfg.x);
    placed[cfg.x] = 1;
    while (static_cast<int>(order.size()) < pn) {
      int best = -1, best_links = -1;
      for (int p = 0; p < pn; ++p) {
        if (placed[p]) continue;
        int links = 0;
        for (int q : cfg.rotation[p]) links += placed[q];
        if (links > best_links) {
          best = p;
          best_links = links;
        }
      }
      if (best_links == 0) {
        fail(Errc::Disconnected, "pattern configuration must be connected");
      }
      order.push_back(best);
      placed[best] = 1;
    }
  }

  std::map<DedupKey, std::vector<int>> found;
  std::vector<int> img(pn, -1);
  std::vector<char> used(host.order(), 0);

  auto admissible = [&](int p, int h) {
    if (used[h]) return false;
    if (anchor) {
      const bool is_endpoint = (p == cfg.x || p == cfg.y);
      const bool is_anchor_vertex = (h == anchor->a || h == anchor->b);
      if (is_endpoint != is_anchor_vertex) return false;
    }
    if (semantics == AppearanceSemantics::Configuration && cfg.is_interior(p) &&
        host.interior_degree[h] != cfg.pinned_degree(p)) {
      return false;
    }
    for (int q : cfg.rotation[p]) {
      if (img[q] >= 0 && !host.has_edge(h, img[q])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      keep_min(found, cfg, img);
      return;
    }
    const int p = order[idx];
    if (idx == 0) {
      if (anchor) {
        for (int h : {anchor->a, anchor->b}) {
          if (!admissible(p, h)) continue;
          img[p] = h;
          used[h] = 1;
          self(self, idx + 1);
          used[h] = 0;
          img[p] = -1;
        }
      } else {
        for (int h = 0; h < host.order(); ++h) {
          if (!admissible(p, h)) continue;
          img[p] = h;
          used[h] = 1;
          self(self, idx + 1);
          used[h] = 0;
          img[p] = -1;
        }
      }
      return;
    }
    // Candidates come from the host neighborhood of one placed neighbor.
    int pivot = -1;
    for (int q : cfg.rotation[p]) {
      if (img[q] >= 0) {
        pivot = img[q];
        break;
      }
    }
    for (int h : (*host.adj)[pivot]) {
      if (!admissible(p, h)) continue;
      img[p] = h;
      used[h] = 1;
      self(self, idx + 1);
      used[h] = 0;
      img[p] = -1;
    }
  };
  rec(rec, 0);
  return collect(std::move(found));
}

}  // namespace

std::vector<Appearance> find_appearances(const PlaneTriangulation& host,
                                         const Configuration& cfg,
                                         std::optional<EdgeRef> anchor,
                                         AppearanceSemantics semantics) {
  if (anchor && anchor->a == anchor->b) {
    fail(Errc::WrongVertices, "anchor endpoints must differ");
  }
  return match(view_of(host), cfg, anchor, semantics);
}

std::vector<Appearance> find_appearances_in_configuration(
    const Configuration& host, const Configuration& pattern,
    bool anchor_endpoints, AppearanceSemantics semantics) {
  std::optional<EdgeRef> anchor;
  if (anchor_endpoints) anchor = EdgeRef{host.x, host.y};
  return match(view_of(host), pattern, anchor, semantics);
}

std::vector<Appearance> find_diamond_appearances(const PlaneTriangulation& host,
                                                 std::optional<EdgeRef> anchor) {
  const Configuration& cfg = birkhoff_diamond();
  std::map<DedupKey, std::vector<int>> found;

  auto common_neighbors = [&](int a, int b, int exclude) {
    std::vector<int> result;
    for (int w : host.neighbors(a)) {
      if (w != exclude && host.has_edge(b, w)) result.push_back(w);
    }
    return result;
  };

  // Remaining fifth neighbor of a degree-5 interior image.
  auto fifth_neighbor = [&](int v, int n0, int n1, int n2, int n3) {
    int result = -1;
    for (int w : host.neighbors(v)) {
      if (w != n0 && w != n1 && w != n2 && w != n3) {
        if (result >= 0) return -1;  // degree > 5, not pinnable
        result = w;
      }
    }
    return result;
  };

  std::vector<int> img(10, -1);
  auto try_seed = [&](int p, int q, int d0, int d2) {
    if (host.degree(p) != 5 || host.degree(q) != 5) return;
    if (host.degree(d0) != 5 || host.degree(d2) != 5) return;
    img[7] = p;
    img[9] = q;
    img[6] = d0;
    img[8] = d2;
    // Ring vertices adjacent to two interior ones sit on the corresponding
    // common-neighbor sets; the rest are the interiors' fifth neighbors.
    for (int r1 : common_neighbors(img[6], img[7], img[9])) {
      for (int r2 : common_neighbors(img[7], img[8], img[9])) {
        for (int r4 : common_neighbors(img[8], img[9], img[7])) {
          for (int r5 : common_neighbors(img[9], img[6], img[7])) {
            img[1] = r1;
            img[2] = r2;
            img[4] = r4;
            img[5] = r5;
            img[0] = fifth_neighbor(img[6], img[1], img[7], img[9], img[5]);
            img[3] = fifth_neighbor(img[8], img[2], img[7], img[9], img[4]);
            if (img[0] < 0 || img[3] < 0) continue;
            if (!host.has_edge(img[0], img[1]) ||
                !host.has_edge(img[0], img[5]) ||
                !host.has_edge(img[3], img[2]) ||
                !host.has_edge(img[3], img[4])) {
              continue;
            }
            std::vector<int> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) !=
                sorted.end()) {
              continue;
            }
            bool edges_ok = true;
            for (int a = 0; a < 10 && edges_ok; ++a) {
              for (int b : cfg.rotation[a]) {
                if (a < b && !host.has_edge(img[a], img[b])) {
                  edges_ok = false;
                  break;
                }
              }
            }
            if (!edges_ok) continue;
            if (anchor) {
              int ex = std::min(img[0], img[3]), ey = std::max(img[0], img[3]);
              if (ex != std::min(anchor->a, anchor->b) ||
                  ey != std::max(anchor->a, anchor->b)) {
                continue;
              }
            }
            keep_min(found, cfg, img);
          }
        }
      }
    }
  };

  for (auto e : host.edges()) {
    for (auto [p, q] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      // Any common neighbor of the diagonal can serve as d0/d2; beyond the
      // two flank apexes this matters only for 3-connected hosts.
      auto ds = common_neighbors(p, q, -1);
      for (int d0 : ds) {
        for (int d2 : ds) {
          if (d0 != d2) try_seed(p, q, d0, d2);
        }
      }
    }
  }
  return collect(std::move(found));
}

Configuration extract_locking_configuration(const PlaneTriangulation& t,
                                            EdgeRef e) {
  if (is_kempe_locked(t, e).verdict != LockVerdict::Locked) {
    fail(Errc::NotLockedInput, "edge is not Kempe-locked");
  }
  MarkedNearTriangulation g = delete_edge(t, e);
  PlaneGraph k = delete_vertices(g, {g.u, g.v});
  // Survivor ids were compacted preserving order.
  auto new_id = [&](int old) {
    int shift = (old > std::min(g.u, g.v)) + (old > std::max(g.u, g.v));
    return old - shift;
  };
  return make_configuration(std::move(k), new_id(g.x), new_id(g.y));
}

bool is_fundamental(const Configuration& k,
                    const std::vector<Configuration>& catalog) {
  for (const Configuration& smaller : catalog) {
    if (smaller.order() >= k.order()) continue;
    if (!find_appearances_in_configuration(k, smaller, true).empty()) {
      return false;
    }
  }
  return true;
}

CanonicalCode configuration_code(const Configuration& cfg) {
  const int n = cfg.order();
  std::vector<std::uint8_t> best;
  std::vector<int> labels;
  for (int root : {cfg.x, cfg.y}) {
    for (int si = 0; si < cfg.degree(root); ++si) {
      for (bool reversed : {false, true}) {
        auto bytes = rooted_code(cfg.rotation, root, si, reversed, &labels);
        if (static_cast<int>(labels.size()) != n ||
            std::count(labels.begin(), labels.end(), 0) != 0) {
          fail(Errc::Disconnected, "configuration must be connected");
        }
        int lx = labels[cfg.x], ly = labels[cfg.y];
        bytes.push_back(static_cast<std::uint8_t>(std::min(lx, ly)));
        bytes.push_back(static_cast<std::uint8_t>(std::max(lx, ly)));
        if (best.empty() || bytes < best) best = std::move(bytes);
      }
    }
  }
  return CanonicalCode{std::move(best)};
}

}  // namespace kempe
