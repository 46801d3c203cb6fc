#include "kempe/connectivity.hpp"

#include <algorithm>
#include <set>

namespace kempe {

namespace {

// Components of t with the marked vertices removed.
int component_count_without(const PlaneTriangulation& t,
                            const std::vector<char>& removed) {
  const int n = t.order();
  std::vector<char> seen(n, 0);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (removed[start] || seen[start]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbors(v)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

std::vector<std::array<int, 3>> separating_triangles(
    const PlaneTriangulation& t) {
  std::set<std::array<int, 3>> facial;
  for (auto f : t.faces()) {
    std::sort(f.begin(), f.end());
    facial.insert(f);
  }
  std::vector<std::array<int, 3>> result;
  for (auto e : t.edges()) {
    for (int c : t.neighbors(e.a)) {
      if (c > e.b && t.has_edge(e.b, c)) {
        std::array<int, 3> tri{e.a, e.b, c};
        if (!facial.count(tri)) result.push_back(tri);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::array<int, 4>> separating_quads(const PlaneTriangulation& t) {
  if (!separating_triangles(t).empty()) {
    fail(Errc::PreconditionViolated, "graph has a separating triangle");
  }
  const int n = t.order();

  // 4-cycles (a, p, b, q) enumerated from their diagonal pairs {a, b};
  // normalized to start at the minimum vertex with the smaller neighbor next.
  std::set<std::array<int, 4>> cycles;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> common;
      for (int w : t.neighbors(a)) {
        if (w != b && t.has_edge(b, w)) common.push_back(w);
      }
      std::sort(common.begin(), common.end());
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          int p = common[i], q = common[j];
          std::array<int, 4> walk{a, p, b, q};
          int min_pos = static_cast<int>(
              std::min_element(walk.begin(), walk.end()) - walk.begin());
          std::array<int, 4> fwd, rev;
          for (int s = 0; s < 4; ++s) {
            fwd[s] = walk[(min_pos + s) % 4];
            rev[s] = walk[(min_pos - s + 4) % 4];
          }
          cycles.insert(fwd[1] <= rev[1] ? fwd : rev);
        }
      }
    }
  }

  std::vector<std::array<int, 4>> result;
  std::vector<char> removed(n, 0);
  for (const auto& cyc : cycles) {
    for (int v : cyc) removed[v] = 1;
    if (component_count_without(t, removed) > 1) result.push_back(cyc);
    for (int v : cyc) removed[v] = 0;
  }
  return result;
}

ConnectivityClass classify(const PlaneTriangulation& t) {
  if (t.order() < 5) {
    fail(Errc::TooSmall, "connectivity classes need order >= 5");
  }
  ConnectivityClass cls;
  cls.separating_triangles = separating_triangles(t);
  if (!cls.separating_triangles.empty()) {
    cls.level = 3;
    return cls;
  }
  cls.separating_quads = separating_quads(t);
  cls.level = cls.separating_quads.empty() ? 5 : 4;
  return cls;
}

}  // namespace kempe
