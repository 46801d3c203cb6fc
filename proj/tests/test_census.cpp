#include "kempe/census.hpp"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "kempe/kempe.hpp"

using namespace kempe;

TEST_CASE("small exhaustive orders hold no locks") {
  Census census(CensusOptions{.connectivity = 4, .jobs = 2});
  const std::vector<std::int64_t> four_connected_counts{1, 1, 2, 4, 10};
  for (int order = 6; order <= 10; ++order) {
    auto record = census.run_exhaustive(order);
    CHECK(record.locked.empty());
    CHECK(record.classes_examined == four_connected_counts[order - 6]);
    census.absorb(record);
  }
}

TEST_CASE("ingested single-graph census on the locked fixture") {
  Census census(CensusOptions{.connectivity = 4, .jobs = 1});
  std::vector<PlaneTriangulation> graphs{fixtures::t12()};
  auto record = census.run_ingested(12, graphs);
  CHECK(record.classes_examined == 1);
  REQUIRE(record.locked.size() == 1);
  const LockedEntry& entry = record.locked.front();
  CHECK(entry.locked_edges.size() == 1);
  CHECK(entry.diamond_anchored);
  CHECK(entry.fundamental);  // the catalog's diamond is not strictly smaller
  CHECK(entry.certificate.distinct_coloring_count == 6);
  CHECK(entry.certificate.connectivity == 4);
  CHECK(verify_certificate(entry.certificate).ok);

  auto report = check_conjecture(record);
  CHECK(report.ok());
  CHECK(report.multi_edge_locks.empty());
  // Nine diamonds appear in the fixture; only one sits on the locked edge.
  CHECK(record.non_sufficiency_witnesses == 8);

  SUBCASE("the record survives a JSON round trip byte-identically") {
    auto text = write_census_record(record);
    auto back = read_census_record(text);
    CHECK(write_census_record(back) == text);
    CHECK(back.locked.front().certificate == entry.certificate);
  }

  SUBCASE("absorbing the record extends the catalog") {
    CHECK(census.catalog().size() == 1);  // seeded diamond
    census.absorb(record);
    CHECK(census.catalog().size() == 1);  // K12 is the diamond itself
  }
}

TEST_CASE("icosahedron census: thirty non-sufficiency witnesses, no locks") {
  Census census(CensusOptions{.connectivity = 5, .jobs = 1});
  std::vector<PlaneTriangulation> graphs{fixtures::icosahedron()};
  auto record = census.run_ingested(12, graphs);
  CHECK(record.classes_examined == 1);
  CHECK(record.locked.empty());
  CHECK(record.non_sufficiency_witnesses == 30);
  auto report = check_conjecture(record);
  CHECK(report.ok());
  CHECK(report.non_sufficiency_witnesses == 30);
}

TEST_CASE("worker count does not change the record") {
  std::vector<PlaneTriangulation> graphs{fixtures::t12(), fixtures::icosahedron(),
                                         fixtures::octahedron()};
  // Mixed orders: only the order-12 graphs are examined.
  Census one(CensusOptions{.connectivity = 4, .jobs = 1});
  Census four(CensusOptions{.connectivity = 4, .jobs = 4});
  auto a = one.run_ingested(12, graphs);
  auto b = four.run_ingested(12, graphs);
  a.elapsed_seconds = b.elapsed_seconds = 0;
  CHECK(write_census_record(a) == write_census_record(b));
  CHECK(a.classes_examined == 2);
}

TEST_CASE("sampled census is reproducible at a fixed seed") {
  Census census(CensusOptions{.connectivity = 4, .jobs = 2});
  auto a = census.run_sampled(13, 50, 42);
  auto b = census.run_sampled(13, 50, 42);
  a.elapsed_seconds = b.elapsed_seconds = 0;
  CHECK(write_census_record(a) == write_census_record(b));
  CHECK(check_conjecture(a).ok());
}

TEST_CASE("tampering is caught") {
  Census census(CensusOptions{.connectivity = 4, .jobs = 1});
  std::vector<PlaneTriangulation> graphs{fixtures::t12()};
  auto record = census.run_ingested(12, graphs);
  REQUIRE(record.locked.size() == 1);

  SUBCASE("altered coloring count") {
    auto bad = record;
    bad.locked[0].certificate.distinct_coloring_count = 7;
    CHECK_FALSE(verify_certificate(bad.locked[0].certificate).ok);
    CHECK_FALSE(check_conjecture(bad).ok());
  }
  SUBCASE("corrupted diamond map") {
    auto bad = record;
    std::swap(bad.locked[0].certificate.diamond[0],
              bad.locked[0].certificate.diamond[1]);
    CHECK_FALSE(verify_certificate(bad.locked[0].certificate).ok);
    CHECK_FALSE(check_conjecture(bad).ok());
  }
  SUBCASE("tampered chain witness") {
    auto bad = record;
    auto& chain = bad.locked[0].certificate.chain_witnesses.at(0).chains.at(0);
    chain.vertices.pop_back();
    CHECK_FALSE(verify_certificate(bad.locked[0].certificate).ok);
  }
  SUBCASE("a lock claimed on the icosahedron fails verification") {
    auto bad = record.locked[0].certificate;
    bad.graph = fixtures::icosahedron().rotation();
    auto result = verify_certificate(bad);
    CHECK_FALSE(result.ok);
  }
}

TEST_CASE("checkpoint records store, reload and resume") {
  auto dir = std::filesystem::temp_directory_path() / "kempe-census-test";
  std::filesystem::remove_all(dir);

  Census census(CensusOptions{.connectivity = 4, .jobs = 1});
  std::vector<PlaneTriangulation> graphs{fixtures::t12()};
  auto record = census.run_ingested(12, graphs);
  store_census_record(dir, record);

  auto loaded = load_census_record(dir, 12, 4);
  REQUIRE(loaded.has_value());
  CHECK(write_census_record(*loaded) == write_census_record(record));
  CHECK_FALSE(load_census_record(dir, 13, 4).has_value());

  // A truncated checkpoint is treated as absent.
  auto path = census_record_path(dir, 12, 4);
  std::ofstream(path, std::ios::trunc) << "{\"format\":\"kempe-census-record\"";
  CHECK_FALSE(load_census_record(dir, 12, 4).has_value());
  std::filesystem::remove_all(dir);
}
