#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/kempe.hpp"
#include "kempe/plane_graph.hpp"

namespace kempe {

// planar_code: ASCII header ">>planar_code<<", then per graph one order
// byte n and, for each vertex 1..n, its neighbors in embedding order as
// 1-based bytes terminated by a 0 byte. Only the single-byte (n <= 255)
// variant is supported.
inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

// Decodes a stream; every graph is validated as a plane triangulation and
// file order is preserved. The visitor returns false to stop.
void read_planar_code(std::istream& in,
                      const std::function<bool(PlaneTriangulation)>& visit);
std::vector<PlaneTriangulation> read_planar_code(std::istream& in);
std::vector<PlaneTriangulation> read_planar_code(
    std::span<const std::uint8_t> bytes);

void write_planar_code(std::ostream& out,
                       std::span<const PlaneTriangulation> graphs);
std::vector<std::uint8_t> write_planar_code(
    std::span<const PlaneTriangulation> graphs);

// Self-contained, re-checkable evidence for one Kempe-locked edge: the
// triangulation's rotation lists plus everything derived from them.
struct ChainWitness {
  std::array<std::uint8_t, 2> colors;
  std::vector<int> vertices;

  friend bool operator==(const ChainWitness&, const ChainWitness&) = default;
};

struct ColoringWitness {
  std::vector<std::uint8_t> coloring;   // per-vertex colors 1..4
  std::vector<ChainWitness> chains;     // the chains through x and y

  friend bool operator==(const ColoringWitness&,
                         const ColoringWitness&) = default;
};

struct LockCertificate {
  Rotation graph;
  int order = 0;
  EdgeRef locked_edge;
  int connectivity = 0;
  std::int64_t distinct_coloring_count = 0;
  std::vector<ColoringWitness> chain_witnesses;  // one entry per coloring
  std::vector<int> diamond;  // Birkhoff appearance: config vertex -> graph vertex
  CanonicalCode code;

  friend bool operator==(const LockCertificate&,
                         const LockCertificate&) = default;
};

// Stable-field-order JSON text; lossless round trip. read_certificate throws
// SchemaViolation on missing or ill-typed fields.
std::string write_certificate(const LockCertificate& cert);
LockCertificate read_certificate(const std::string& text);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

}  // namespace kempe
