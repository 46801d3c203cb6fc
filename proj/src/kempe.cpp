#include "kempe/kempe.hpp"

#include <algorithm>

namespace kempe {

bool KempeChain::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

KempeChain chain_at(const Rotation& adj, const Coloring& c, int v,
                    std::array<std::uint8_t, 2> pair) {
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  if (c[v] != pair[0] && c[v] != pair[1]) {
    fail(Errc::ColorMismatch, "anchor color " + std::to_string(c[v]) +
                                  " not in the requested pair");
  }
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{v};
  seen[v] = 1;
  std::vector<int> members;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    members.push_back(cur);
    for (int w : adj[cur]) {
      if (!seen[w] && (c[w] == pair[0] || c[w] == pair[1])) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return KempeChain{pair, std::move(members), v};
}

Coloring interchange(const Coloring& c, const KempeChain& chain) {
  Coloring out = c;
  for (int v : chain.vertices) {
    if (out.assignment[v] == chain.colors[0]) {
      out.assignment[v] = chain.colors[1];
    } else {
      out.assignment[v] = chain.colors[0];
    }
  }
  return out;
}

bool two_color_path_blocked(const MarkedNearTriangulation& g, const Coloring& c,
                            std::array<std::uint8_t, 2> pair) {
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  const std::uint8_t k = c[g.x];
  if (pair[0] == pair[1] || k == pair[0] || k == pair[1]) {
    fail(Errc::BadColors, "pair must be two colors distinct from the endpoint color");
  }
  auto in_pair = [&](int w) { return c[w] == pair[0] || c[w] == pair[1]; };
  // Mode (2): one boundary vertex does not even take a pair color.
  if (!in_pair(g.v) || !in_pair(g.u)) return true;
  // Mode (1): the chain through v must not reach u.
  return !chain_at(g.rotation, c, g.v, pair).contains(g.u);
}

LockAnalysis is_kempe_locked(const MarkedNearTriangulation& gxy,
                             bool collect_witnesses) {
  LockAnalysis result;
  bool failed = false;
  for_each_identified_coloring(gxy, [&](const Coloring& c) {
    ++result.colorings_seen;
    const std::uint8_t k = c[gxy.x];
    LockWitness witness;
    int chain_idx = 0;
    for (std::uint8_t j = 1; j <= 4; ++j) {
      if (j == k) continue;
      KempeChain chain = chain_at(gxy.rotation, c, gxy.x, {k, j});
      if (!chain.contains(gxy.y)) {
        result.verdict = LockVerdict::NotLocked;
        result.witness_coloring = c;
        result.escaping_chain = std::move(chain);
        failed = true;
        return false;
      }
      if (collect_witnesses) witness.chains[chain_idx] = std::move(chain);
      ++chain_idx;
    }
    if (collect_witnesses) {
      witness.coloring = c;
      result.witnesses.push_back(std::move(witness));
    }
    return true;
  });
  if (!failed) {
    result.verdict = result.colorings_seen == 0 ? LockVerdict::Vacuous
                                                : LockVerdict::Locked;
  }
  return result;
}

LockAnalysis is_kempe_locked(const PlaneTriangulation& t, EdgeRef e,
                             bool collect_witnesses) {
  return is_kempe_locked(delete_edge(t, e), collect_witnesses);
}

}  // namespace kempe
