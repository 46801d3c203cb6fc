#include "kempe/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "kempe/connectivity.hpp"
#include "kempe/kempe.hpp"

namespace kempe {

const char* census_mode_name(CensusMode mode) noexcept {
  switch (mode) {
    case CensusMode::Exhaustive: return "exhaustive";
    case CensusMode::Ingested: return "ingested";
    case CensusMode::Sampled: return "sampled";
  }
  return "unknown";
}

namespace {

// Orbits of the edge set under the full automorphism group; the group is
// closed, so one application per automorphism suffices.
std::map<EdgeRef, std::vector<EdgeRef>> edge_orbits(
    const PlaneTriangulation& t, const std::vector<std::vector<int>>& autos) {
  std::map<EdgeRef, std::set<std::pair<int, int>>> by_rep;
  for (EdgeRef e : t.edges()) {
    EdgeRef rep = e;
    std::set<std::pair<int, int>> members;
    for (const auto& sigma : autos) {
      EdgeRef image = EdgeRef{sigma[e.a], sigma[e.b]}.normalized();
      members.insert({image.a, image.b});
      if (image < rep) rep = image;
    }
    auto& bucket = by_rep[rep];
    bucket.insert(members.begin(), members.end());
  }
  std::map<EdgeRef, std::vector<EdgeRef>> orbits;
  for (auto& [rep, members] : by_rep) {
    auto& list = orbits[rep];
    for (auto [a, b] : members) list.push_back({a, b});
  }
  return orbits;
}

struct GraphOutcome {
  bool examined = false;
  std::int64_t non_sufficiency = 0;
  std::optional<LockedEntry> locked;
};

GraphOutcome examine_graph(const PlaneTriangulation& t, int min_connectivity,
                           const std::vector<Configuration>& catalog) {
  GraphOutcome out;
  const int level = t.order() >= 5 ? classify(t).level : 3;
  if (level < min_connectivity) return out;
  out.examined = true;

  CanonicalForm form = canonical_form(t);
  auto orbits = edge_orbits(t, form.automorphisms);

  std::vector<EdgeRef> locked_edges;
  std::vector<EdgeRef> locked_reps;
  for (const auto& [rep, members] : orbits) {
    if (is_kempe_locked(t, rep).verdict == LockVerdict::Locked) {
      locked_reps.push_back(rep);
      locked_edges.insert(locked_edges.end(), members.begin(), members.end());
    }
  }
  std::sort(locked_edges.begin(), locked_edges.end());

  // Appearances not explained by a locked edge witness non-sufficiency.
  for (const Appearance& app : find_diamond_appearances(t)) {
    EdgeRef endpoints = EdgeRef{app.map[0], app.map[3]}.normalized();
    if (!std::binary_search(locked_edges.begin(), locked_edges.end(),
                            endpoints)) {
      ++out.non_sufficiency;
    }
  }

  if (locked_edges.empty()) return out;

  LockedEntry entry;
  entry.code = form.code;
  entry.locked_edges = locked_edges;
  entry.diamond_anchored = true;
  for (EdgeRef rep : locked_reps) {
    if (find_diamond_appearances(t, rep).empty()) {
      entry.diamond_anchored = false;
    }
  }

  const EdgeRef cert_edge = locked_edges.front();
  LockAnalysis analysis = is_kempe_locked(t, cert_edge, true);
  Configuration k = extract_locking_configuration(t, cert_edge);
  entry.fundamental = is_fundamental(k, catalog);

  LockCertificate cert;
  cert.graph = t.rotation();
  cert.order = t.order();
  cert.locked_edge = cert_edge;
  cert.connectivity = level;
  cert.distinct_coloring_count = analysis.colorings_seen;
  for (const LockWitness& w : analysis.witnesses) {
    ColoringWitness cw;
    cw.coloring = w.coloring.assignment;
    for (const KempeChain& chain : w.chains) {
      cw.chains.push_back(ChainWitness{chain.colors, chain.vertices});
    }
    cert.chain_witnesses.push_back(std::move(cw));
  }
  auto anchored = find_diamond_appearances(t, cert_edge);
  if (!anchored.empty()) cert.diamond = anchored.front().map;
  cert.code = form.code;
  entry.certificate = std::move(cert);
  out.locked = std::move(entry);
  return out;
}

}  // namespace

Census::Census(CensusOptions options)
    : options_(options),
      owned_generator_(std::in_place, options.generator),
      generator_(&*owned_generator_) {
  catalog_.push_back(birkhoff_diamond());
  catalog_codes_.insert(configuration_code(catalog_.back()).bytes);
}

Census::Census(CensusOptions options, ExhaustiveGenerator& shared)
    : options_(options), generator_(&shared) {
  catalog_.push_back(birkhoff_diamond());
  catalog_codes_.insert(configuration_code(catalog_.back()).bytes);
}

void Census::absorb(const CensusRecord& record) {
  for (const LockedEntry& entry : record.locked) {
    PlaneTriangulation t = build_triangulation(entry.certificate.graph);
    Configuration k =
        extract_locking_configuration(t, entry.certificate.locked_edge);
    if (catalog_codes_.insert(configuration_code(k).bytes).second) {
      catalog_.push_back(std::move(k));
    }
  }
}

CensusRecord Census::run_source(
    int order, std::size_t count,
    const std::function<PlaneTriangulation(std::size_t)>& at, CensusMode mode,
    std::uint64_t seed, int sample_count) {
  const auto start = std::chrono::steady_clock::now();
  CensusRecord record;
  record.order = order;
  record.connectivity = options_.connectivity;
  record.mode = mode;
  record.sample_seed = seed;
  record.sample_count = sample_count;

  std::vector<GraphOutcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= count) break;
      outcomes[idx] = examine_graph(at(idx), options_.connectivity, catalog_);
    }
  };
  const int jobs = std::max(1, std::min<int>(options_.jobs,
                                             static_cast<int>(count ? count : 1)));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < jobs; ++s) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (GraphOutcome& outcome : outcomes) {
    if (!outcome.examined) continue;
    ++record.classes_examined;
    record.non_sufficiency_witnesses += outcome.non_sufficiency;
    if (outcome.locked) record.locked.push_back(std::move(*outcome.locked));
  }
  std::sort(record.locked.begin(), record.locked.end(),
            [](const LockedEntry& a, const LockedEntry& b) {
              return a.code < b.code;
            });
  record.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

CensusRecord Census::run_exhaustive(int order) {
  const auto& codes = generator_->level(order);
  return run_source(
      order, codes.size(),
      [&codes](std::size_t i) { return decode_code(codes[i]); },
      CensusMode::Exhaustive, 0, 0);
}

CensusRecord Census::run_ingested(int order,
                                  std::span<const PlaneTriangulation> graphs) {
  // Corpora are deduplicated defensively and processed in code order so the
  // record does not depend on file ordering.
  std::map<std::vector<std::uint8_t>, const PlaneTriangulation*> by_code;
  for (const PlaneTriangulation& t : graphs) {
    if (t.order() != order) continue;
    by_code.emplace(canonical_code(t).bytes, &t);
  }
  std::vector<const PlaneTriangulation*> ordered;
  ordered.reserve(by_code.size());
  for (auto& [code, ptr] : by_code) ordered.push_back(ptr);
  return run_source(
      order, ordered.size(),
      [&ordered](std::size_t i) { return *ordered[i]; }, CensusMode::Ingested,
      0, 0);
}

CensusRecord Census::run_sampled(int order, int count, std::uint64_t seed) {
  std::vector<PlaneTriangulation> graphs = sample_random(order, count, seed);
  return run_source(
      order, graphs.size(), [&graphs](std::size_t i) { return graphs[i]; },
      CensusMode::Sampled, seed, count);
}

namespace {

bool valid_anchored_diamond(const PlaneTriangulation& t,
                            const std::vector<int>& map, EdgeRef edge,
                            std::string& why) {
  const Configuration& cfg = birkhoff_diamond();
  if (static_cast<int>(map.size()) != cfg.order()) {
    why = "diamond map has wrong size";
    return false;
  }
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= t.order() ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    why = "diamond map is not injective into the graph";
    return false;
  }
  for (int a = 0; a < cfg.order(); ++a) {
    for (int b : cfg.rotation[a]) {
      if (a < b && !t.has_edge(map[a], map[b])) {
        why = "diamond map drops a configuration edge";
        return false;
      }
    }
  }
  for (int d : cfg.interior) {
    if (t.degree(map[d]) != cfg.pinned_degree(d)) {
      why = "interior image degree differs from the pinned degree";
      return false;
    }
    for (int w : t.neighbors(map[d])) {
      if (!std::binary_search(sorted.begin(), sorted.end(), w)) {
        why = "interior image has a neighbor outside the image";
        return false;
      }
    }
  }
  if (EdgeRef{map[cfg.x], map[cfg.y]} != edge) {
    why = "diamond endpoints do not sit on the locked edge";
    return false;
  }
  return true;
}

}  // namespace

VerifyResult verify_certificate(const LockCertificate& cert) {
  VerifyResult result;
  auto flag = [&](const std::string& reason) {
    result.ok = false;
    result.reasons.push_back(reason);
  };

  std::optional<PlaneTriangulation> rebuilt;
  try {
    rebuilt = build_triangulation(cert.graph);
  } catch (const Error& e) {
    flag(std::string("graph does not validate: ") + e.what());
    return result;
  }
  const PlaneTriangulation& t = *rebuilt;

  if (t.order() != cert.order) flag("order field mismatch");
  if (canonical_code(t) != cert.code) flag("canonical code mismatch");
  if (cert.locked_edge.a < 0 || cert.locked_edge.b < 0 ||
      cert.locked_edge.a >= t.order() || cert.locked_edge.b >= t.order() ||
      !t.has_edge(cert.locked_edge.a, cert.locked_edge.b)) {
    flag("locked edge is not an edge of the graph");
    return result;
  }
  const int level = t.order() >= 5 ? classify(t).level : 3;
  if (level != cert.connectivity) flag("connectivity field mismatch");

  LockAnalysis analysis = is_kempe_locked(t, cert.locked_edge, true);
  if (analysis.verdict != LockVerdict::Locked) {
    flag("edge is not Kempe-locked");
    return result;
  }
  if (analysis.colorings_seen != cert.distinct_coloring_count) {
    flag("distinct coloring count mismatch");
  }
  if (analysis.witnesses.size() != cert.chain_witnesses.size()) {
    flag("chain witness count mismatch");
  } else {
    for (std::size_t i = 0; i < analysis.witnesses.size(); ++i) {
      const LockWitness& fresh = analysis.witnesses[i];
      const ColoringWitness& stored = cert.chain_witnesses[i];
      if (fresh.coloring.assignment != stored.coloring) {
        flag("witness coloring " + std::to_string(i) + " mismatch");
        continue;
      }
      if (stored.chains.size() != fresh.chains.size()) {
        flag("witness chain count mismatch at coloring " + std::to_string(i));
        continue;
      }
      for (std::size_t c = 0; c < stored.chains.size(); ++c) {
        if (stored.chains[c].colors != fresh.chains[c].colors ||
            stored.chains[c].vertices != fresh.chains[c].vertices) {
          flag("chain witness mismatch at coloring " + std::to_string(i));
          break;
        }
      }
    }
  }

  std::string why;
  if (!valid_anchored_diamond(t, cert.diamond, cert.locked_edge, why)) {
    flag("diamond appearance invalid: " + why);
  }
  return result;
}

ConjectureReport check_conjecture(const CensusRecord& record) {
  ConjectureReport report;
  report.non_sufficiency_witnesses = record.non_sufficiency_witnesses;
  for (const LockedEntry& entry : record.locked) {
    const std::string tag = "order " + std::to_string(record.order) +
                            " code " + to_hex(entry.code.bytes);
    if (!entry.diamond_anchored) {
      report.violations.push_back(
          tag + ": locked edge without an anchored Birkhoff appearance");
    }
    if (entry.certificate.code != entry.code) {
      report.violations.push_back(tag + ": certificate names a different graph");
    }
    VerifyResult verified = [&] {
      try {
        return verify_certificate(entry.certificate);
      } catch (const Error& e) {
        VerifyResult bad;
        bad.ok = false;
        bad.reasons.push_back(e.what());
        return bad;
      }
    }();
    if (!verified.ok) {
      for (const std::string& reason : verified.reasons) {
        report.violations.push_back(tag + ": certificate fails: " + reason);
      }
    }
    if (entry.locked_edges.size() > 1) {
      report.multi_edge_locks.push_back(
          tag + ": locked at " + std::to_string(entry.locked_edges.size()) +
          " edges");
    }
  }
  return report;
}

// --- checkpoint records ---

namespace {

using Json = nlohmann::ordered_json;

Json locked_entry_to_json(const LockedEntry& entry) {
  Json j;
  j["code"] = to_hex(entry.code.bytes);
  Json edges = Json::array();
  for (EdgeRef e : entry.locked_edges) {
    edges.push_back(Json::array({e.a, e.b}));
  }
  j["locked_edges"] = std::move(edges);
  j["diamond_anchored"] = entry.diamond_anchored;
  j["fundamental"] = entry.fundamental;
  j["certificate"] = Json::parse(write_certificate(entry.certificate));
  return j;
}

}  // namespace

std::string write_census_record(const CensusRecord& record) {
  Json j;
  j["format"] = "kempe-census-record";
  j["version"] = 1;
  j["order"] = record.order;
  j["connectivity"] = record.connectivity;
  j["mode"] = census_mode_name(record.mode);
  j["sample_seed"] = record.sample_seed;
  j["sample_count"] = record.sample_count;
  j["classes_examined"] = record.classes_examined;
  j["non_sufficiency_witnesses"] = record.non_sufficiency_witnesses;
  Json locked = Json::array();
  for (const LockedEntry& entry : record.locked) {
    locked.push_back(locked_entry_to_json(entry));
  }
  j["locked"] = std::move(locked);
  j["elapsed_seconds"] = record.elapsed_seconds;
  j["complete"] = true;
  return j.dump(2);
}

CensusRecord read_census_record(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::SchemaViolation, "not valid JSON");
  if (!j.is_object() || j.value("format", "") != "kempe-census-record" ||
      !j.value("complete", false)) {
    fail(Errc::SchemaViolation, "not a complete census record");
  }
  CensusRecord record;
  record.order = j.at("order").get<int>();
  record.connectivity = j.at("connectivity").get<int>();
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "exhaustive") {
    record.mode = CensusMode::Exhaustive;
  } else if (mode == "ingested") {
    record.mode = CensusMode::Ingested;
  } else if (mode == "sampled") {
    record.mode = CensusMode::Sampled;
  } else {
    fail(Errc::SchemaViolation, "unknown census mode");
  }
  record.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  record.sample_count = j.at("sample_count").get<int>();
  record.classes_examined = j.at("classes_examined").get<std::int64_t>();
  record.non_sufficiency_witnesses =
      j.at("non_sufficiency_witnesses").get<std::int64_t>();
  for (const Json& ej : j.at("locked")) {
    LockedEntry entry;
    entry.code.bytes = from_hex(ej.at("code").get<std::string>());
    for (const Json& edge : ej.at("locked_edges")) {
      entry.locked_edges.push_back({edge.at(0).get<int>(), edge.at(1).get<int>()});
    }
    entry.diamond_anchored = ej.at("diamond_anchored").get<bool>();
    entry.fundamental = ej.at("fundamental").get<bool>();
    entry.certificate = read_certificate(ej.at("certificate").dump());
    record.locked.push_back(std::move(entry));
  }
  record.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  return record;
}

std::filesystem::path census_record_path(const std::filesystem::path& dir,
                                         int order, int connectivity) {
  return dir / ("census-c" + std::to_string(connectivity) + "-order" +
                std::to_string(order) + ".json");
}

std::optional<CensusRecord> load_census_record(const std::filesystem::path& dir,
                                               int order, int connectivity) {
  const auto path = census_record_path(dir, order, connectivity);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return read_census_record(buffer.str());
  } catch (const Error&) {
    return std::nullopt;  // incomplete checkpoint, recompute
  }
}

void store_census_record(const std::filesystem::path& dir,
                         const CensusRecord& record) {
  std::filesystem::create_directories(dir);
  const auto path = census_record_path(dir, record.order, record.connectivity);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << write_census_record(record) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace kempe
