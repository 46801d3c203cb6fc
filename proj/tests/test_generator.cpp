#include "kempe/generator.hpp"

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "kempe/connectivity.hpp"
#include "oracles.hpp"

using namespace kempe;

TEST_CASE("split_vertex basics") {
  auto k4 = fixtures::k4();
  SUBCASE("every K4 split gives the unique order-5 triangulation") {
    for (int v = 0; v < 4; ++v) {
      const auto& nbrs = k4.neighbors(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          auto t = split_vertex(k4, v, nbrs[i], nbrs[j]);
          CHECK(t.order() == 5);
          CHECK(canonical_code(t) == canonical_code(fixtures::stacked5()));
        }
      }
    }
  }
  SUBCASE("octahedron splits validate") {
    auto oct = fixtures::octahedron();
    auto t = split_vertex(oct, 0, 1, 3);
    CHECK(t.order() == 7);
    CHECK(t.edge_count() == 3 * 7 - 6);
  }
  SUBCASE("split then contract round-trips") {
    auto oct = fixtures::octahedron();
    for (int v = 0; v < oct.order(); ++v) {
      const auto& nbrs = oct.neighbors(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          auto t = split_vertex(oct, v, nbrs[i], nbrs[j]);
          auto back = contract_edge(t, {v, t.order() - 1});
          CHECK(canonical_code(back) == canonical_code(oct));
        }
      }
    }
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS((void)split_vertex(k4, 0, 1, 1), Error);
    CHECK_THROWS_AS((void)split_vertex(k4, 0, 1, 0), Error);
  }
}

TEST_CASE("exhaustive counts match the frozen sequence") {
  // Isomorphism classes of simple plane triangulations, orders 4..10.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233};
  ExhaustiveGenerator gen;
  for (int order = 4; order <= 10; ++order) {
    CHECK(gen.level(order).size() == expected[order - 4]);
  }
}

TEST_CASE("exhaustive classes equal the flip-closure oracle") {
  ExhaustiveGenerator gen;
  for (int order = 4; order <= 9; ++order) {
    auto oracle = oracles::flip_closure_classes(order);
    auto mine = generate_all(order, 3, gen);
    REQUIRE(mine.size() == oracle.size());
    // Match each oracle class to exactly one generated class.
    std::set<std::size_t> hit;
    for (const auto& reference : oracle) {
      bool matched = false;
      for (std::size_t i = 0; i < mine.size(); ++i) {
        if (hit.count(i)) continue;
        if (oracles::isomorphic(reference.rotation(), mine[i].rotation())) {
          hit.insert(i);
          matched = true;
          break;
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("connectivity filter") {
  ExhaustiveGenerator gen;
  auto all6 = generate_all(6, 3, gen);
  CHECK(all6.size() == 2);
  auto four6 = generate_all(6, 4, gen);
  REQUIRE(four6.size() == 1);
  CHECK(canonical_code(four6[0]) == canonical_code(fixtures::octahedron()));
  for (const auto& t : generate_all(9, 4, gen)) {
    CHECK(classify(t).level >= 4);
  }
}

TEST_CASE("order 12 with filter 5 is exactly the icosahedron") {
  ExhaustiveGenerator gen{GeneratorOptions{.max_exhaustive_order = 12, .jobs = 2}};
  auto five12 = generate_all(12, 5, gen);
  REQUIRE(five12.size() == 1);
  CHECK(canonical_code(five12[0]) == canonical_code(fixtures::icosahedron()));
}

TEST_CASE("generated output is sorted, deduplicated and valid") {
  ExhaustiveGenerator gen;
  const auto& codes = gen.level(9);
  for (std::size_t i = 1; i < codes.size(); ++i) CHECK(codes[i - 1] < codes[i]);
  for (const auto& code : codes) {
    auto t = decode_code(code);
    CHECK(canonical_code(t) == code);
  }
}

TEST_CASE("the exhaustive bound guards resources") {
  ExhaustiveGenerator gen{GeneratorOptions{.max_exhaustive_order = 8}};
  CHECK_THROWS_AS((void)gen.level(9), Error);
}

TEST_CASE("sampling is deterministic, distinct and validated") {
  auto first = sample_random(14, 100, 7);
  auto second = sample_random(14, 100, 7);
  REQUIRE(first.size() == 100);
  std::set<std::vector<std::uint8_t>> codes;
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].rotation() == second[i].rotation());
    CHECK(first[i].edge_count() == 3 * 14 - 6);
    codes.insert(canonical_code(first[i]).bytes);
  }
  CHECK(codes.size() == 100);
}

TEST_CASE("sampling edge cases") {
  auto one = sample_random(4, 1, 123);
  REQUIRE(one.size() == 1);
  CHECK(canonical_code(one[0]) == canonical_code(fixtures::k4()));
  CHECK_THROWS_AS((void)sample_random(4, 2, 123), Error);
}
