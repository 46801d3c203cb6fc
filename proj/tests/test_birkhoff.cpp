#include "kempe/birkhoff.hpp"

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "kempe/connectivity.hpp"
#include "kempe/generator.hpp"
#include "kempe/kempe.hpp"
#include "oracles.hpp"

using namespace kempe;

TEST_CASE("the pinned diamond configuration") {
  const Configuration& d = birkhoff_diamond();
  CHECK(d.order() == 10);
  CHECK(d.ring.size() == 6);
  CHECK(d.interior == std::vector<int>{6, 7, 8, 9});
  for (int v : d.interior) CHECK(d.pinned_degree(v) == 5);
  // Ring degrees in walk order from x: 3 4 4 3 4 4.
  CHECK(d.degree(d.x) == 3);
  CHECK(d.degree(d.y) == 3);
  long edges = 0;
  for (int v = 0; v < d.order(); ++v) edges += d.degree(v);
  CHECK(edges / 2 == 21);
  // Central diamond: cycle 6-7-8-9 plus the 7-9 diagonal.
  CHECK(d.has_edge(6, 7));
  CHECK(d.has_edge(7, 8));
  CHECK(d.has_edge(8, 9));
  CHECK(d.has_edge(9, 6));
  CHECK(d.has_edge(7, 9));
  CHECK_FALSE(d.has_edge(6, 8));
}

TEST_CASE("extraction from the locked fixture is the diamond") {
  auto t12 = fixtures::t12();
  auto k = extract_locking_configuration(t12, fixtures::t12_locked_edge());
  CHECK(k.order() == 10);
  CHECK(configuration_code(k) == configuration_code(birkhoff_diamond()));
  CHECK_THROWS_AS(
      (void)extract_locking_configuration(t12, EdgeRef{0, 3}),  // xv, unlocked
      Error);
}

TEST_CASE("anchored appearance on the locked fixture") {
  auto t12 = fixtures::t12();
  fixtures::T12Ids ids;
  auto anchored = find_diamond_appearances(t12, fixtures::t12_locked_edge());
  REQUIRE(anchored.size() == 1);
  std::set<int> image(anchored[0].map.begin(), anchored[0].map.end());
  std::set<int> expected;
  for (int v = 0; v < 12; ++v) {
    if (v != ids.u && v != ids.v) expected.insert(v);
  }
  CHECK(image == expected);
  CHECK(anchored[0].map[0] + anchored[0].map[3] == ids.x + ids.y);
}

TEST_CASE("icosahedron holds exactly 30 diamonds, K4 none") {
  CHECK(find_diamond_appearances(fixtures::icosahedron()).size() == 30);
  CHECK(find_diamond_appearances(fixtures::k4()).empty());
  CHECK(find_appearances(fixtures::k4(), birkhoff_diamond()).empty());
}

TEST_CASE("fast path, general matcher and brute oracle agree") {
  std::vector<PlaneTriangulation> hosts{fixtures::t12(), fixtures::icosahedron(),
                                        fixtures::octahedron()};
  ExhaustiveGenerator gen;
  for (int order = 4; order <= 9; ++order) {
    generate_all(order, 3, gen, [&](const PlaneTriangulation& t) {
      hosts.push_back(t);
      return true;
    });
  }
  for (const auto& host : hosts) {
    auto fast = find_diamond_appearances(host);
    auto general = find_appearances(host, birkhoff_diamond());
    auto brute = oracles::brute_appearances(host, birkhoff_diamond());
    CHECK(fast == general);
    CHECK(general == brute);
    for (auto e : host.edges()) {
      auto fa = find_diamond_appearances(host, e);
      auto ga = find_appearances(host, birkhoff_diamond(), e);
      auto ba = oracles::brute_appearances(host, birkhoff_diamond(), e);
      CHECK(fa == ga);
      CHECK(ga == ba);
    }
  }
}

TEST_CASE("anchored appearances force endpoint degrees of at least 6") {
  for (const auto& host : {fixtures::t12(), fixtures::icosahedron()}) {
    for (auto e : host.edges()) {
      if (!find_diamond_appearances(host, e).empty()) {
        CHECK(host.degree(e.a) >= 6);
        CHECK(host.degree(e.b) >= 6);
      }
    }
  }
}

TEST_CASE("no central-diamond edge of an appearance can anchor one") {
  for (const auto& host : {fixtures::t12(), fixtures::icosahedron()}) {
    for (const auto& app : find_diamond_appearances(host)) {
      const std::array<std::pair<int, int>, 5> central{
          std::pair{6, 7}, {7, 8}, {8, 9}, {9, 6}, {7, 9}};
      for (auto [a, b] : central) {
        EdgeRef edge{app.map[a], app.map[b]};
        CHECK(host.degree(edge.a) == 5);  // pinned interior degree
        CHECK(find_diamond_appearances(host, edge).empty());
      }
    }
  }
}

TEST_CASE("appearance search inside a configuration host") {
  const Configuration& d = birkhoff_diamond();
  // The diamond appears in itself exactly once, endpoints on endpoints.
  auto self = find_appearances_in_configuration(d, d, true);
  REQUIRE(self.size() == 1);
  std::vector<int> identity{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(self[0].map == identity);

  // A host whose interior degrees differ cannot hold the diamond: take the
  // configuration left by deleting an icosahedron edge's boundary pair.
  auto g = delete_edge(fixtures::icosahedron(), {0, 1});
  auto k = delete_vertices(g, {g.u, g.v});
  int shift_x = (g.x > std::min(g.u, g.v)) + (g.x > std::max(g.u, g.v));
  int shift_y = (g.y > std::min(g.u, g.v)) + (g.y > std::max(g.u, g.v));
  Configuration host = make_configuration(k, g.x - shift_x, g.y - shift_y);
  CHECK(host.order() == 10);
  CHECK(find_appearances_in_configuration(host, d, true).empty());
  CHECK(find_appearances_in_configuration(host, d, false).empty());
}

TEST_CASE("fundamentality is catalog-relative") {
  auto k = extract_locking_configuration(fixtures::t12(),
                                         fixtures::t12_locked_edge());
  CHECK(is_fundamental(k, {}));
  // Only strictly smaller catalog members count.
  CHECK(is_fundamental(k, {k}));
  CHECK(is_fundamental(k, {birkhoff_diamond()}));  // same order 10
}

TEST_CASE("subgraph semantics is at least as permissive") {
  for (const auto& host : {fixtures::t12(), fixtures::icosahedron()}) {
    auto strict = find_appearances(host, birkhoff_diamond(), {},
                                   AppearanceSemantics::Configuration);
    auto loose = find_appearances(host, birkhoff_diamond(), {},
                                  AppearanceSemantics::Subgraph);
    CHECK(loose.size() >= strict.size());
  }
}

TEST_CASE("configuration codes pin the endpoints") {
  const Configuration& d = birkhoff_diamond();
  // Moving an endpoint to a ring vertex of different role changes the code.
  Configuration shifted = d;
  shifted.x = 1;
  shifted.y = 4;
  CHECK_FALSE(configuration_code(shifted) == configuration_code(d));
  // Swapping the endpoints does not.
  Configuration swapped = d;
  std::swap(swapped.x, swapped.y);
  CHECK(configuration_code(swapped) == configuration_code(d));
}
