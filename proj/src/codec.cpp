#include "kempe/codec.hpp"

#include <cstring>
#include <sstream>

#include "json.hpp"

namespace kempe {

namespace {

constexpr std::size_t kHeaderLen = sizeof(kPlanarCodeHeader) - 1;  // 15 bytes

}  // namespace

void read_planar_code(std::istream& in,
                      const std::function<bool(PlaneTriangulation)>& visit) {
  char header[kHeaderLen];
  in.read(header, kHeaderLen);
  if (static_cast<std::size_t>(in.gcount()) != kHeaderLen ||
      std::memcmp(header, kPlanarCodeHeader, kHeaderLen) != 0) {
    fail(Errc::BadHeader, "expected \">>planar_code<<\"");
  }
  while (true) {
    const int first = in.get();
    if (first == std::istream::traits_type::eof()) break;
    const int n = first;
    if (n == 0) fail(Errc::VertexOutOfRange, "order byte is zero");
    Rotation rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        const int byte = in.get();
        if (byte == std::istream::traits_type::eof()) {
          fail(Errc::TruncatedRecord, "record ends inside the list of vertex " +
                                          std::to_string(v + 1));
        }
        if (byte == 0) break;
        if (byte > n) {
          fail(Errc::VertexOutOfRange,
               "neighbor byte " + std::to_string(byte) + " exceeds order " +
                   std::to_string(n));
        }
        rot[v].push_back(byte - 1);
      }
    }
    if (!visit(build_triangulation(std::move(rot)))) return;
  }
}

std::vector<PlaneTriangulation> read_planar_code(std::istream& in) {
  std::vector<PlaneTriangulation> out;
  read_planar_code(in, [&](PlaneTriangulation t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::vector<PlaneTriangulation> read_planar_code(
    std::span<const std::uint8_t> bytes) {
  std::istringstream in(
      std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  return read_planar_code(in);
}

void write_planar_code(std::ostream& out,
                       std::span<const PlaneTriangulation> graphs) {
  out.write(kPlanarCodeHeader, kHeaderLen);
  for (const PlaneTriangulation& t : graphs) {
    if (t.order() > 255) {
      fail(Errc::OrderOverflow, "planar_code records hold at most 255 vertices");
    }
    out.put(static_cast<char>(t.order()));
    for (int v = 0; v < t.order(); ++v) {
      for (int w : t.neighbors(v)) {
        out.put(static_cast<char>(w + 1));
      }
      out.put(0);
    }
  }
}

std::vector<std::uint8_t> write_planar_code(
    std::span<const PlaneTriangulation> graphs) {
  std::ostringstream out;
  write_planar_code(out, graphs);
  const std::string s = out.str();
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) fail(Errc::SchemaViolation, "odd hex length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) fail(Errc::SchemaViolation, "bad hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json rotation_to_json(const Rotation& rot) {
  Json lists = Json::array();
  for (const auto& list : rot) lists.push_back(list);
  return lists;
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::SchemaViolation, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(Errc::SchemaViolation, std::string("ill-typed field '") + key + "'");
  }
}

}  // namespace

std::string write_certificate(const LockCertificate& cert) {
  Json j;
  j["format"] = "kempe-lock-certificate";
  j["version"] = 1;
  j["order"] = cert.order;
  j["graph"] = rotation_to_json(cert.graph);
  j["locked_edge"] = Json::array({cert.locked_edge.a, cert.locked_edge.b});
  j["connectivity"] = cert.connectivity;
  j["distinct_coloring_count"] = cert.distinct_coloring_count;
  Json witnesses = Json::array();
  for (const ColoringWitness& w : cert.chain_witnesses) {
    Json chains = Json::array();
    for (const ChainWitness& chain : w.chains) {
      Json c;
      c["colors"] = Json::array({chain.colors[0], chain.colors[1]});
      c["vertices"] = chain.vertices;
      chains.push_back(std::move(c));
    }
    Json entry;
    entry["coloring"] = w.coloring;
    entry["chains"] = std::move(chains);
    witnesses.push_back(std::move(entry));
  }
  j["chain_witnesses"] = std::move(witnesses);
  j["diamond"] = cert.diamond;
  j["code"] = to_hex(cert.code.bytes);
  return j.dump(2);
}

LockCertificate read_certificate(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::SchemaViolation, "not valid JSON");
  if (get_field<std::string>(j, "format") != "kempe-lock-certificate") {
    fail(Errc::SchemaViolation, "unknown format tag");
  }

  LockCertificate cert;
  cert.order = get_field<int>(j, "order");
  for (auto& list : get_field<std::vector<std::vector<int>>>(j, "graph")) {
    cert.graph.push_back(std::move(list));
  }
  auto edge = get_field<std::vector<int>>(j, "locked_edge");
  if (edge.size() != 2) fail(Errc::SchemaViolation, "locked_edge needs 2 ids");
  cert.locked_edge = EdgeRef{edge[0], edge[1]};
  cert.connectivity = get_field<int>(j, "connectivity");
  cert.distinct_coloring_count =
      get_field<std::int64_t>(j, "distinct_coloring_count");

  if (!j.contains("chain_witnesses") || !j["chain_witnesses"].is_array()) {
    fail(Errc::SchemaViolation, "missing field 'chain_witnesses'");
  }
  for (const Json& entry : j["chain_witnesses"]) {
    ColoringWitness w;
    w.coloring = get_field<std::vector<std::uint8_t>>(entry, "coloring");
    if (!entry.contains("chains") || !entry["chains"].is_array()) {
      fail(Errc::SchemaViolation, "witness missing 'chains'");
    }
    for (const Json& cj : entry["chains"]) {
      ChainWitness chain;
      auto colors = get_field<std::vector<int>>(cj, "colors");
      if (colors.size() != 2) fail(Errc::SchemaViolation, "chain needs 2 colors");
      chain.colors = {static_cast<std::uint8_t>(colors[0]),
                      static_cast<std::uint8_t>(colors[1])};
      chain.vertices = get_field<std::vector<int>>(cj, "vertices");
      w.chains.push_back(std::move(chain));
    }
    cert.chain_witnesses.push_back(std::move(w));
  }

  cert.diamond = get_field<std::vector<int>>(j, "diamond");
  cert.code.bytes = from_hex(get_field<std::string>(j, "code"));
  return cert;
}

}  // namespace kempe
