#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kempe/birkhoff.hpp"
#include "kempe/codec.hpp"
#include "kempe/generator.hpp"
#include "kempe/plane_graph.hpp"

namespace kempe {

enum class CensusMode { Exhaustive, Ingested, Sampled };

const char* census_mode_name(CensusMode mode) noexcept;

struct CensusOptions {
  int connectivity = 4;  // minimum level a graph must reach to be examined
  int jobs = 1;
  GeneratorOptions generator;
};

struct LockedEntry {
  CanonicalCode code;
  std::vector<EdgeRef> locked_edges;  // every locked edge, normalized, sorted
  bool diamond_anchored = false;      // all locked edges carry an anchored appearance
  bool fundamental = false;           // K_xy fundamental relative to the catalog
  LockCertificate certificate;        // for the canonical orbit representative
};

struct CensusRecord {
  int order = 0;
  int connectivity = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t sample_seed = 0;
  int sample_count = 0;
  std::int64_t classes_examined = 0;
  std::vector<LockedEntry> locked;  // sorted by canonical code
  // Diamond appearances whose endpoint pair is not a locked edge: evidence
  // that presence does not suffice for locking.
  std::int64_t non_sufficiency_witnesses = 0;
  double elapsed_seconds = 0.0;
};

// Drives generation/ingestion -> connectivity filter -> per-edge locking
// tests -> anchoring, extraction and certificates. Edges are tested once per
// orbit of the automorphism group; every edge of every examined graph is
// covered (no early exit per graph). The catalog of discovered locking
// configurations threads through ascending orders and is seeded with the
// Birkhoff diamond.
class Census {
 public:
  explicit Census(CensusOptions options);
  // Shares an externally owned generator so several censuses (e.g. different
  // connectivity filters) reuse the cached levels.
  Census(CensusOptions options, ExhaustiveGenerator& shared);

  ExhaustiveGenerator& generator() { return *generator_; }
  const CensusOptions& options() const { return options_; }
  const std::vector<Configuration>& catalog() const { return catalog_; }

  CensusRecord run_exhaustive(int order);
  CensusRecord run_ingested(int order, std::span<const PlaneTriangulation> graphs);
  CensusRecord run_sampled(int order, int count, std::uint64_t seed);

  // Folds a (possibly reloaded) record's locking configurations into the
  // catalog so later orders test fundamentality against them.
  void absorb(const CensusRecord& record);

 private:
  CensusRecord run_source(int order, std::size_t count,
                          const std::function<PlaneTriangulation(std::size_t)>& at,
                          CensusMode mode, std::uint64_t seed, int sample_count);

  CensusOptions options_;
  std::optional<ExhaustiveGenerator> owned_generator_;
  ExhaustiveGenerator* generator_;
  std::vector<Configuration> catalog_;
  std::set<std::vector<std::uint8_t>> catalog_codes_;
};

struct ConjectureReport {
  std::vector<std::string> violations;
  std::int64_t non_sufficiency_witnesses = 0;
  std::vector<std::string> multi_edge_locks;

  bool ok() const { return violations.empty(); }
};

// The headline check: every locked edge must carry an anchored Birkhoff
// appearance, and every certificate must re-verify from its rotation lists
// alone. Violations are counterexample reports; multi-edge locks are
// surfaced separately (none are known).
ConjectureReport check_conjecture(const CensusRecord& record);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Rebuilds the triangulation from the certificate's rotation lists and
// re-derives every other field, reporting all mismatches.
VerifyResult verify_certificate(const LockCertificate& cert);

// Checkpoint records, one JSON file per order in a results directory.
std::string write_census_record(const CensusRecord& record);
CensusRecord read_census_record(const std::string& text);
std::filesystem::path census_record_path(const std::filesystem::path& dir,
                                         int order, int connectivity);
std::optional<CensusRecord> load_census_record(const std::filesystem::path& dir,
                                               int order, int connectivity);
void store_census_record(const std::filesystem::path& dir,
                         const CensusRecord& record);

}  // namespace kempe
