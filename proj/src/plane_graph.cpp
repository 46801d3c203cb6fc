#include "kempe/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace kempe {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotTriangulation: return "NotTriangulation";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::DegenerateFlank: return "DegenerateFlank";
    case Errc::NotContractible: return "NotContractible";
    case Errc::WrongVertices: return "WrongVertices";
    case Errc::InvalidSplit: return "InvalidSplit";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::ExhaustedRetries: return "ExhaustedRetries";
    case Errc::BadHeader: return "BadHeader";
    case Errc::TruncatedRecord: return "TruncatedRecord";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooSmall: return "TooSmall";
    case Errc::ColorMismatch: return "ColorMismatch";
    case Errc::BadColors: return "BadColors";
    case Errc::NotLockedInput: return "NotLockedInput";
  }
  return "Unknown";
}

int index_in(const std::vector<int>& list, int value) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == value) return static_cast<int>(i);
  }
  return -1;
}

namespace {

bool adjacency_has(const Rotation& rot, int a, int b) {
  return index_in(rot[a], b) >= 0;
}

// Successor of u in the rotation of v.
int succ_at(const Rotation& rot, int v, int u) {
  int j = index_in(rot[v], u);
  if (j < 0) fail(Errc::NoSuchEdge, "no directed edge");
  const auto& list = rot[v];
  return list[(j + 1) % list.size()];
}

bool is_connected(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : rot[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

void check_simple(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 0 || sorted[i] >= n) {
        fail(Errc::NotSimple, "neighbor id out of range at vertex " +
                                  std::to_string(v));
      }
      if (sorted[i] == v) fail(Errc::NotSimple, "loop at vertex " + std::to_string(v));
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        fail(Errc::NotSimple,
             "parallel edge at vertex " + std::to_string(v));
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int w : rot[v]) {
      if (!adjacency_has(rot, w, v)) {
        fail(Errc::NotSimple, "adjacency not symmetric: " + std::to_string(v) +
                                  "-" + std::to_string(w));
      }
    }
  }
}

}  // namespace

bool PlaneGraph::has_edge(int a, int b) const {
  return adjacency_has(rotation, a, b);
}

bool MarkedNearTriangulation::has_edge(int a, int b) const {
  return adjacency_has(rotation, a, b);
}

bool PlaneTriangulation::has_edge(int a, int b) const {
  return adjacency_has(rot_, a, b);
}

std::vector<std::vector<int>> trace_faces(const Rotation& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
  }
  const int m = offset[n];  // number of directed edges
  std::vector<char> used(m, 0);
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      int id = offset[v] + static_cast<int>(i);
      if (used[id]) continue;
      std::vector<int> walk;
      int cv = v;
      int ci = static_cast<int>(i);
      while (true) {
        int cid = offset[cv] + ci;
        if (used[cid]) break;
        used[cid] = 1;
        walk.push_back(cv);
        int cw = rot[cv][ci];
        int j = index_in(rot[cw], cv);
        ci = (j + 1) % static_cast<int>(rot[cw].size());
        cv = cw;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

PlaneTriangulation PlaneTriangulation::build(Rotation rotation) {
  const int n = static_cast<int>(rotation.size());
  if (n < 4) fail(Errc::NotTriangulation, "order < 4");
  check_simple(rotation);
  if (!is_connected(rotation)) fail(Errc::Disconnected, "graph not connected");

  auto faces = trace_faces(rotation);
  for (const auto& walk : faces) {
    if (walk.size() != 3) {
      fail(Errc::NotTriangulation,
           "traced face of length " + std::to_string(walk.size()));
    }
  }

  long degree_sum = 0;
  for (const auto& list : rotation) degree_sum += static_cast<long>(list.size());
  const long edges = degree_sum / 2;
  // All faces are triangles, so E != 3n-6 (equivalently F != 2n-4) means the
  // rotation system embeds on a surface of higher genus.
  if (edges != 3L * n - 6 || static_cast<int>(faces.size()) != 2 * n - 4) {
    fail(Errc::EulerViolation, "edge count " + std::to_string(edges) +
                                   " != 3n-6 = " + std::to_string(3 * n - 6));
  }

  return PlaneTriangulation(std::move(rotation), static_cast<int>(edges));
}

PlaneTriangulation build_triangulation(Rotation rotation) {
  return PlaneTriangulation::build(std::move(rotation));
}

std::vector<EdgeRef> PlaneTriangulation::edges() const {
  std::vector<EdgeRef> result;
  result.reserve(edge_count_);
  for (int v = 0; v < order(); ++v) {
    for (int w : rot_[v]) {
      if (v < w) result.push_back({v, w});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::array<int, 3>> PlaneTriangulation::faces() const {
  std::vector<std::array<int, 3>> result;
  for (const auto& walk : trace_faces(rot_)) {
    result.push_back({walk[0], walk[1], walk[2]});
  }
  return result;
}

std::array<int, 2> PlaneTriangulation::flank_apexes(EdgeRef e) const {
  if (e.a < 0 || e.b < 0 || e.a >= order() || e.b >= order() ||
      !has_edge(e.a, e.b)) {
    fail(Errc::NoSuchEdge,
         std::to_string(e.a) + "-" + std::to_string(e.b));
  }
  return {succ_at(rot_, e.b, e.a), succ_at(rot_, e.a, e.b)};
}

MarkedNearTriangulation delete_edge(const PlaneTriangulation& t, EdgeRef e) {
  auto [u, v] = t.flank_apexes(e);  // u = apex of face (x->y), v = apex of (y->x)
  if (u == v) {
    fail(Errc::DegenerateFlank, "flanking faces share their apex");
  }
  const int x = e.a;
  const int y = e.b;
  Rotation rot = t.rotation();
  rot[x].erase(rot[x].begin() + index_in(rot[x], y));
  rot[y].erase(rot[y].begin() + index_in(rot[y], x));
  // Boundary cycle reads (u, x, v, y): u = succ_y(x), v = succ_x(y).
  return MarkedNearTriangulation{std::move(rot), u, x, v, y};
}

namespace {

// Rotates `list` so that it starts at `first`.
std::vector<int> rotated_to(const std::vector<int>& list, int first) {
  int j = index_in(list, first);
  std::vector<int> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(list[(j + i) % list.size()]);
  }
  return out;
}

// Compacts vertex ids after removing `gone` (sorted): ids shift down past
// each removed id. Returns the relabeled rotation.
Rotation compact_remove(const Rotation& rot, const std::vector<int>& gone) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> new_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (std::find(gone.begin(), gone.end(), v) == gone.end()) {
      new_id[v] = next++;
    }
  }
  Rotation out(next);
  for (int v = 0; v < n; ++v) {
    if (new_id[v] < 0) continue;
    auto& list = out[new_id[v]];
    list.reserve(rot[v].size());
    for (int w : rot[v]) {
      if (new_id[w] >= 0) list.push_back(new_id[w]);
    }
  }
  return out;
}

}  // namespace

PlaneTriangulation contract_edge(const PlaneTriangulation& t, EdgeRef e) {
  const int x = e.a;
  const int y = e.b;
  if (x < 0 || y < 0 || x >= t.order() || y >= t.order() || !t.has_edge(x, y)) {
    fail(Errc::NoSuchEdge, std::to_string(x) + "-" + std::to_string(y));
  }
  if (t.order() < 5) {
    fail(Errc::NotContractible, "nothing left to triangulate below order 5");
  }
  const Rotation& rot = t.rotation();

  // rot[x] rotated to start at y: [y, b, ..., a]; rot[y]: [x, a, ..., b].
  std::vector<int> px = rotated_to(rot[x], y);
  std::vector<int> py = rotated_to(rot[y], x);
  const int b = px[1];
  const int a = px.back();

  std::vector<int> common;
  for (int w : rot[x]) {
    if (w != y && t.has_edge(y, w)) common.push_back(w);
  }
  std::sort(common.begin(), common.end());
  std::vector<int> flanks{std::min(a, b), std::max(a, b)};
  if (common != flanks) {
    fail(Errc::NotContractible, "extra common neighbors of the endpoints");
  }

  Rotation out = rot;
  // Merged rotation around the coalesced vertex (kept under x's id):
  // x's neighbors from b around to a, then y's strictly between a and b.
  std::vector<int> merged(px.begin() + 1, px.end());
  merged.insert(merged.end(), py.begin() + 2, py.end() - 1);
  out[x] = std::move(merged);
  // Flank a sees (y, x) consecutively, flank b sees (x, y); drop y from both.
  out[a].erase(out[a].begin() + index_in(out[a], y));
  out[b].erase(out[b].begin() + index_in(out[b], y));
  // Remaining neighbors of y (strictly between a and b) now attach to x.
  for (std::size_t i = 2; i + 1 < py.size(); ++i) {
    int w = py[i];
    out[w][index_in(out[w], y)] = x;
  }
  out[y].clear();

  return build_triangulation(compact_remove(out, {y}));
}

PlaneGraph delete_vertices(const MarkedNearTriangulation& g,
                           std::pair<int, int> vs) {
  std::pair<int, int> want{std::min(g.u, g.v), std::max(g.u, g.v)};
  std::pair<int, int> got{std::min(vs.first, vs.second),
                          std::max(vs.first, vs.second)};
  if (want != got) {
    fail(Errc::WrongVertices, "expected the boundary pair {u, v}");
  }
  return PlaneGraph{compact_remove(g.rotation, {got.first, got.second})};
}

namespace {

// Inserts `w` into rot[v] between the cyclically consecutive neighbors
// `before` and `after`.
void insert_between(Rotation& rot, int v, int w, int before, int after) {
  auto& list = rot[v];
  int j = index_in(list, before);
  if (j < 0 || list[(j + 1) % list.size()] != after) {
    fail(Errc::NoSuchEdge, "marked face gap not found at vertex " +
                               std::to_string(v));
  }
  list.insert(list.begin() + j + 1, w);
}

}  // namespace

PlaneTriangulation restore_deleted_edge(const MarkedNearTriangulation& g) {
  Rotation rot = g.rotation;
  // The quad gap at x lies between u and v, at y between v and u.
  insert_between(rot, g.x, g.y, g.u, g.v);
  insert_between(rot, g.y, g.x, g.v, g.u);
  return build_triangulation(std::move(rot));
}

PlaneTriangulation flip_diagonal(const MarkedNearTriangulation& g) {
  if (g.has_edge(g.u, g.v)) {
    fail(Errc::NotSimple, "diagonal uv already present");
  }
  Rotation rot = g.rotation;
  // The quad gap at u lies between y and x, at v between x and y.
  insert_between(rot, g.u, g.v, g.y, g.x);
  insert_between(rot, g.v, g.u, g.x, g.y);
  return build_triangulation(std::move(rot));
}

// --- canonical code ---

namespace {

struct CodeScratch {
  std::vector<int> label;
  std::vector<int> order;
  std::vector<int> entry;  // neighbor whose position starts the vertex's list
  std::vector<std::uint8_t> cand;
};

// Emits the BFS code for root directed edge (r, rot[r][si]) in the given
// orientation, comparing against `best` on the fly. Returns -1 if strictly
// smaller (cand holds the full code), 0 if equal, +1 if larger (aborted).
// With best == nullptr, emits fully and returns -1.
int emit_code(const Rotation& rot, int r, int si, bool reversed,
              const std::vector<std::uint8_t>* best, CodeScratch& ws) {
  const int n = static_cast<int>(rot.size());
  ws.label.assign(n, 0);
  ws.order.clear();
  ws.entry.assign(n, -1);
  ws.cand.clear();
  ws.cand.push_back(static_cast<std::uint8_t>(n));

  const int s = rot[r][si];
  ws.label[r] = 1;
  ws.label[s] = 2;
  ws.order.push_back(r);
  ws.order.push_back(s);
  ws.entry[r] = s;
  ws.entry[s] = r;
  int next_label = 3;

  int cmp = best ? 0 : -1;
  std::size_t pos = 1;

  auto emit = [&](std::uint8_t byte) -> bool {
    if (cmp == 0) {
      std::uint8_t ref = (*best)[pos];
      if (byte > ref) return false;
      if (byte < ref) cmp = -1;
    }
    ++pos;
    ws.cand.push_back(byte);
    return true;
  };

  for (std::size_t k = 0; k < ws.order.size(); ++k) {
    const int v = ws.order[k];
    const auto& list = rot[v];
    const int d = static_cast<int>(list.size());
    const int j0 = index_in(list, ws.entry[v]);
    for (int step = 0; step < d; ++step) {
      int w = reversed ? list[(j0 - step + d * 2) % d] : list[(j0 + step) % d];
      if (ws.label[w] == 0) {
        ws.label[w] = next_label++;
        ws.order.push_back(w);
        ws.entry[w] = v;
      }
      if (!emit(static_cast<std::uint8_t>(ws.label[w]))) return 1;
    }
    if (!emit(0)) return 1;
  }
  return cmp;
}

}  // namespace

CanonicalCode canonical_code(const PlaneTriangulation& t) {
  const Rotation& rot = t.rotation();
  const int n = t.order();

  // The root's emitted list is [2, 3, ..., deg+1, 0], so only minimum-degree
  // roots can achieve the lexicographic minimum.
  int min_deg = n;
  for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, t.degree(v));

  CodeScratch ws;
  std::vector<std::uint8_t> best;
  for (int r = 0; r < n; ++r) {
    if (t.degree(r) != min_deg) continue;
    for (int si = 0; si < t.degree(r); ++si) {
      for (bool reversed : {false, true}) {
        const std::vector<std::uint8_t>* ref = best.empty() ? nullptr : &best;
        if (emit_code(rot, r, si, reversed, ref, ws) < 0) {
          best = ws.cand;
        }
      }
    }
  }
  return CanonicalCode{std::move(best)};
}

CanonicalForm canonical_form(const PlaneTriangulation& t) {
  CanonicalForm form;
  form.code = canonical_code(t);
  const Rotation& rot = t.rotation();
  const int n = t.order();
  int min_deg = n;
  for (int v = 0; v < n; ++v) min_deg = std::min(min_deg, t.degree(v));

  CodeScratch ws;
  std::vector<int> base_inverse;  // vertex with label L under the first argmin
  std::set<std::vector<int>> seen;
  for (int r = 0; r < n; ++r) {
    if (t.degree(r) != min_deg) continue;
    for (int si = 0; si < t.degree(r); ++si) {
      for (bool reversed : {false, true}) {
        if (emit_code(rot, r, si, reversed, &form.code.bytes, ws) != 0) continue;
        std::vector<int> inverse(n);
        for (int v = 0; v < n; ++v) inverse[ws.label[v] - 1] = v;
        if (base_inverse.empty()) base_inverse = inverse;
        // The map sending the base labeling onto this one is an automorphism.
        std::vector<int> sigma(n);
        for (int l = 0; l < n; ++l) sigma[base_inverse[l]] = inverse[l];
        if (seen.insert(sigma).second) {
          form.automorphisms.push_back(std::move(sigma));
        }
      }
    }
  }
  return form;
}

std::vector<std::uint8_t> rooted_code(const Rotation& rot, int root,
                                      int start_index, bool reversed,
                                      std::vector<int>* labels_out) {
  CodeScratch ws;
  emit_code(rot, root, start_index, reversed, nullptr, ws);
  if (labels_out) *labels_out = ws.label;
  return ws.cand;
}

Rotation rotation_from_record(std::span<const std::uint8_t> bytes,
                              std::size_t& consumed) {
  std::size_t p = 0;
  if (bytes.empty()) fail(Errc::TruncatedRecord, "missing order byte");
  const int n = bytes[p++];
  if (n == 0) fail(Errc::VertexOutOfRange, "order byte is zero");
  Rotation rot(n);
  for (int v = 0; v < n; ++v) {
    while (true) {
      if (p >= bytes.size()) {
        fail(Errc::TruncatedRecord,
             "record ends inside the list of vertex " + std::to_string(v + 1));
      }
      const std::uint8_t byte = bytes[p++];
      if (byte == 0) break;
      if (byte > n) {
        fail(Errc::VertexOutOfRange, "neighbor byte " + std::to_string(byte) +
                                         " exceeds order " + std::to_string(n));
      }
      rot[v].push_back(byte - 1);
    }
  }
  consumed = p;
  return rot;
}

PlaneTriangulation decode_code(const CanonicalCode& code) {
  std::size_t consumed = 0;
  Rotation rot = rotation_from_record(code.bytes, consumed);
  if (consumed != code.bytes.size()) {
    fail(Errc::TruncatedRecord, "trailing bytes after code record");
  }
  return build_triangulation(std::move(rot));
}

}  // namespace kempe
