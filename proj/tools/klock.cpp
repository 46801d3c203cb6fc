// klock: census and analysis tool for Kempe-locked plane triangulations.
//
// Exit codes: 0 success, 1 verification or conjecture violation, 2 input
// error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kempe/census.hpp"
#include "kempe/codec.hpp"
#include "kempe/coloring.hpp"
#include "kempe/generator.hpp"
#include "kempe/kempe.hpp"

namespace {

using namespace kempe;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct OrderRange {
  int first = 0;
  int last = 0;
};

OrderRange parse_orders(const std::string& text) {
  OrderRange range;
  auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      range.first = range.last = std::stoi(text);
    } else {
      range.first = std::stoi(text.substr(0, sep));
      range.last = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--orders", "expected N or A..B");
  }
  if (range.first > range.last) std::swap(range.first, range.last);
  return range;
}

EdgeRef parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("--edge", "expected X,Y");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--edge", "expected X,Y");
  }
}

PlaneTriangulation load_graph(const std::string& path, long index) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadHeader, "cannot open " + path);
  std::optional<PlaneTriangulation> found;
  long at = 0;
  read_planar_code(in, [&](PlaneTriangulation t) {
    if (at++ == index) {
      found = std::move(t);
      return false;
    }
    return true;
  });
  if (!found) {
    fail(Errc::TruncatedRecord,
         path + " holds only " + std::to_string(at) + " graphs");
  }
  return std::move(*found);
}

void write_graph_file(const std::string& path,
                      std::span<const PlaneTriangulation> graphs) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::BadHeader, "cannot open " + path + " for writing");
  write_planar_code(out, graphs);
}

int cmd_generate(int order, int connectivity, const std::string& out_path,
                 int jobs) {
  ExhaustiveGenerator gen({.jobs = jobs});
  std::vector<PlaneTriangulation> graphs = generate_all(order, connectivity, gen);
  write_graph_file(out_path, graphs);
  std::cout << "order " << order << ": " << graphs.size()
            << " classes at connectivity >= " << connectivity << " -> "
            << out_path << "\n";
  return kExitOk;
}

int cmd_sample(int order, int count, std::uint64_t seed,
               const std::string& out_path) {
  auto graphs = sample_random(order, count, seed);
  write_graph_file(out_path, graphs);
  std::cout << "order " << order << ": " << graphs.size()
            << " distinct samples (seed " << seed << ") -> " << out_path
            << "\n";
  return kExitOk;
}

void print_record_line(const CensusRecord& record) {
  std::cout << "order " << record.order << " [" << census_mode_name(record.mode)
            << ", connectivity >= " << record.connectivity
            << "]: " << record.classes_examined << " classes examined, "
            << record.locked.size() << " Kempe-locked, "
            << record.non_sufficiency_witnesses
            << " non-sufficiency witnesses (" << record.elapsed_seconds
            << " s)\n";
  for (const LockedEntry& entry : record.locked) {
    std::cout << "  locked " << to_hex(entry.code.bytes) << " edges";
    for (EdgeRef e : entry.locked_edges) {
      std::cout << " (" << e.a << "," << e.b << ")";
    }
    std::cout << (entry.diamond_anchored ? " diamond-anchored" : " NO-DIAMOND")
              << (entry.fundamental ? " fundamental" : "") << "\n";
  }
}

int cmd_census(const std::string& orders_text, int connectivity,
               const std::string& source, int jobs,
               const std::string& out_dir) {
  OrderRange range = parse_orders(orders_text);
  Census census(CensusOptions{.connectivity = connectivity,
                              .jobs = jobs,
                              .generator = {.jobs = jobs}});

  std::map<int, std::vector<PlaneTriangulation>> ingested;
  if (!source.empty()) {
    std::ifstream in(source, std::ios::binary);
    if (!in) fail(Errc::BadHeader, "cannot open " + source);
    read_planar_code(in, [&](PlaneTriangulation t) {
      const int order = t.order();
      if (order >= range.first && order <= range.last) {
        ingested[order].push_back(std::move(t));
      }
      return true;
    });
  }

  bool violation = false;
  for (int order = range.first; order <= range.last; ++order) {
    CensusRecord record;
    bool resumed = false;
    if (!out_dir.empty()) {
      if (auto loaded = load_census_record(out_dir, order, connectivity)) {
        record = std::move(*loaded);
        resumed = true;
      }
    }
    if (!resumed) {
      if (!source.empty()) {
        record = census.run_ingested(order, ingested[order]);
      } else {
        record = census.run_exhaustive(order);
      }
      if (!out_dir.empty()) store_census_record(out_dir, record);
    }
    if (resumed) std::cout << "resumed from checkpoint:\n";
    print_record_line(record);
    ConjectureReport report = check_conjecture(record);
    for (const std::string& line : report.violations) {
      std::cout << "  VIOLATION: " << line << "\n";
      violation = true;
    }
    for (const std::string& line : report.multi_edge_locks) {
      std::cout << "  MULTI-EDGE LOCK: " << line << "\n";
    }
    census.absorb(record);
  }
  return violation ? kExitViolation : kExitOk;
}

int cmd_check_lock(const std::string& path, long index, EdgeRef edge) {
  PlaneTriangulation t = load_graph(path, index);
  LockAnalysis analysis = is_kempe_locked(t, edge, true);
  switch (analysis.verdict) {
    case LockVerdict::Locked:
      std::cout << "Locked: every one of the " << analysis.colorings_seen
                << " identified colorings has all three chains through ("
                << edge.a << "," << edge.b << ")\n";
      break;
    case LockVerdict::Vacuous:
      std::cout << "Vacuous: no identified coloring exists\n";
      break;
    case LockVerdict::NotLocked: {
      std::cout << "NotLocked after " << analysis.colorings_seen
                << " colorings\n";
      std::cout << "  witness coloring:";
      for (std::uint8_t c : analysis.witness_coloring->assignment) {
        std::cout << ' ' << int(c);
      }
      std::cout << "\n  escaping " << int(analysis.escaping_chain->colors[0])
                << "-" << int(analysis.escaping_chain->colors[1])
                << " chain through " << edge.a << ":";
      for (int v : analysis.escaping_chain->vertices) std::cout << ' ' << v;
      std::cout << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_find_diamonds(const std::string& path, long index,
                      const std::string& edge_text) {
  PlaneTriangulation t = load_graph(path, index);
  std::optional<EdgeRef> anchor;
  if (!edge_text.empty()) anchor = parse_edge(edge_text);
  auto appearances = find_diamond_appearances(t, anchor);
  std::cout << appearances.size() << (anchor ? " anchored" : "")
            << " Birkhoff diamond appearance"
            << (appearances.size() == 1 ? "" : "s") << "\n";
  for (const Appearance& app : appearances) {
    std::cout << "  endpoints (" << app.map[0] << "," << app.map[3] << ") map:";
    for (int v : app.map) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_colorings(const std::string& path, long index,
                  const std::string& identify_text, bool count_only) {
  PlaneTriangulation t = load_graph(path, index);
  EdgeRef pair = parse_edge(identify_text);
  if (pair.a < 0 || pair.b < 0 || pair.a >= t.order() || pair.b >= t.order() ||
      pair.a == pair.b) {
    fail(Errc::WrongVertices, "identify pair out of range");
  }
  long shown = 0;
  auto show = [&](const Coloring& c) {
    std::cout << "coloring " << shown++ << ":";
    for (std::uint8_t col : c.assignment) std::cout << ' ' << int(col);
    std::cout << "\n";
    return true;
  };
  if (t.has_edge(pair.a, pair.b)) {
    // Identified colorings live on the near-triangulation with the edge
    // deleted first.
    MarkedNearTriangulation g = delete_edge(t, pair);
    if (count_only) {
      std::cout << count_distinct(g, std::pair{g.x, g.y}) << "\n";
      return kExitOk;
    }
    for_each_identified_coloring(g, show);
    std::cout << shown << " distinct colorings of the near-triangulation with "
              << pair.a << " and " << pair.b << " identified\n";
  } else {
    auto identify = std::pair{pair.a, pair.b};
    if (count_only) {
      std::cout << count_distinct(t, identify) << "\n";
      return kExitOk;
    }
    for_each_partition_coloring(t.rotation(), identify, show);
    std::cout << shown << " distinct colorings with " << pair.a << " and "
              << pair.b << " identified\n";
  }
  return kExitOk;
}

int cmd_verify_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadHeader, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  LockCertificate cert = read_certificate(buffer.str());
  VerifyResult result = verify_certificate(cert);
  if (result.ok) {
    std::cout << "PASS: certificate verifies (order " << cert.order
              << ", edge (" << cert.locked_edge.a << "," << cert.locked_edge.b
              << "), " << cert.distinct_coloring_count << " colorings)\n";
    return kExitOk;
  }
  std::cout << "FAIL: certificate does not verify\n";
  for (const std::string& reason : result.reasons) {
    std::cout << "  " << reason << "\n";
  }
  return kExitViolation;
}

std::vector<CensusRecord> load_all_records(const std::string& dir) {
  std::vector<CensusRecord> records;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      records.push_back(read_census_record(buffer.str()));
    } catch (const Error&) {
      // not a census record, skip
    }
  }
  std::sort(records.begin(), records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return std::tuple(a.order, a.connectivity) <
                     std::tuple(b.order, b.connectivity);
            });
  return records;
}

int cmd_report(const std::string& dir, const std::string& format) {
  auto records = load_all_records(dir);
  bool violation = false;
  if (format == "json") {
    std::cout << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::cout << write_census_record(records[i])
                << (i + 1 < records.size() ? ",\n" : "\n");
      if (!check_conjecture(records[i]).ok()) violation = true;
    }
    std::cout << "]\n";
  } else if (format == "csv") {
    std::cout << "order,connectivity,mode,classes_examined,locked,"
                 "single_edge_locks,diamond_anchored,fundamental,"
                 "non_sufficiency_witnesses,violations\n";
    for (const auto& record : records) {
      auto report = check_conjecture(record);
      if (!report.ok()) violation = true;
      long single = 0, anchored = 0, fundamental = 0;
      for (const auto& e : record.locked) {
        single += e.locked_edges.size() == 1;
        anchored += e.diamond_anchored;
        fundamental += e.fundamental;
      }
      std::cout << record.order << ',' << record.connectivity << ','
                << census_mode_name(record.mode) << ','
                << record.classes_examined << ',' << record.locked.size() << ','
                << single << ',' << anchored << ',' << fundamental << ','
                << record.non_sufficiency_witnesses << ','
                << report.violations.size() << "\n";
    }
  } else {
    for (const auto& record : records) {
      print_record_line(record);
      auto report = check_conjecture(record);
      for (const std::string& line : report.violations) {
        std::cout << "  VIOLATION: " << line << "\n";
        violation = true;
      }
      for (const std::string& line : report.multi_edge_locks) {
        std::cout << "  MULTI-EDGE LOCK: " << line << "\n";
      }
    }
    if (records.empty()) std::cout << "no census records in " << dir << "\n";
  }
  return violation ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kempe-locking census over plane triangulations"};
  app.require_subcommand(1);

  auto* generate =
      app.add_subcommand("generate", "exhaustive isomorph-free generation");
  int gen_order = 0, gen_conn = 3, gen_jobs = 2;
  std::string gen_out;
  generate->add_option("--order", gen_order, "vertex count")->required();
  generate
      ->add_option("--connectivity", gen_conn, "minimum connectivity {3|4|5}")
      ->check(CLI::IsMember({3, 4, 5}));
  generate->add_option("--out", gen_out, "planar_code output file")->required();
  generate->add_option("--jobs", gen_jobs, "worker threads");

  auto* census = app.add_subcommand("census", "per-edge Kempe-locking census");
  std::string census_orders, census_source, census_out;
  int census_conn = 4, census_jobs = 2;
  census->add_option("--orders", census_orders, "order range A..B")->required();
  census
      ->add_option("--connectivity", census_conn, "minimum connectivity {4|5}")
      ->check(CLI::IsMember({4, 5}));
  census->add_option("--source", census_source,
                     "planar_code corpus (built-in generation otherwise)");
  census->add_option("--jobs", census_jobs, "worker threads");
  census->add_option("--out", census_out, "checkpoint directory");

  auto* check = app.add_subcommand("check-lock", "decide one edge");
  std::string check_graph, check_edge;
  long check_index = 0;
  check->add_option("--graph", check_graph, "planar_code file")->required();
  check->add_option("--index", check_index, "graph index (0-based)");
  check->add_option("--edge", check_edge, "edge X,Y")->required();

  auto* diamonds =
      app.add_subcommand("find-diamonds", "Birkhoff diamond appearances");
  std::string dia_graph, dia_edge;
  long dia_index = 0;
  diamonds->add_option("--graph", dia_graph, "planar_code file")->required();
  diamonds->add_option("--index", dia_index, "graph index (0-based)");
  diamonds->add_option("--edge", dia_edge, "anchor endpoints X,Y");

  auto* colorings =
      app.add_subcommand("colorings", "distinct identified 4-colorings");
  std::string col_graph, col_identify;
  long col_index = 0;
  bool col_count_only = false;
  colorings->add_option("--graph", col_graph, "planar_code file")->required();
  colorings->add_option("--index", col_index, "graph index (0-based)");
  colorings->add_option("--identify", col_identify, "vertex pair X,Y")
      ->required();
  colorings->add_flag("--count-only", col_count_only, "print only the count");

  auto* sample =
      app.add_subcommand("sample", "seeded random non-isomorphic samples");
  int sample_order = 0, sample_count = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--order", sample_order, "vertex count")->required();
  sample->add_option("--count", sample_count, "distinct graphs")->required();
  sample->add_option("--seed", sample_seed, "RNG seed")->required();
  sample->add_option("--out", sample_out, "planar_code output file")->required();

  auto* verify =
      app.add_subcommand("verify-certificate", "re-check a lock certificate");
  std::string verify_path;
  verify->add_option("file", verify_path, "certificate JSON file")->required();

  auto* report = app.add_subcommand("report", "summarize census checkpoints");
  std::string report_dir, report_format = "text";
  report->add_option("--dir", report_dir, "checkpoint directory")->required();
  report->add_option("--format", report_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen_order, gen_conn, gen_out, gen_jobs);
    if (*census) {
      return cmd_census(census_orders, census_conn, census_source, census_jobs,
                        census_out);
    }
    if (*check) {
      return cmd_check_lock(check_graph, check_index, parse_edge(check_edge));
    }
    if (*diamonds) return cmd_find_diamonds(dia_graph, dia_index, dia_edge);
    if (*colorings) {
      return cmd_colorings(col_graph, col_index, col_identify, col_count_only);
    }
    if (*sample) {
      return cmd_sample(sample_order, sample_count, sample_seed, sample_out);
    }
    if (*verify) return cmd_verify_certificate(verify_path);
    if (*report) return cmd_report(report_dir, report_format);
  } catch (const kempe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
