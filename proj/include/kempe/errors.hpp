#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Every failure mode the library reports. Codes are stable; messages are
// human-readable detail only.
enum class Errc {
  // plane_graph
  NotSimple,
  NotTriangulation,
  EulerViolation,
  Disconnected,
  NoSuchEdge,
  DegenerateFlank,
  NotContractible,
  WrongVertices,
  InvalidSplit,
  // generator
  OrderTooLarge,
  ExhaustedRetries,
  // codec
  BadHeader,
  TruncatedRecord,
  VertexOutOfRange,
  OrderOverflow,
  SchemaViolation,
  // connectivity
  PreconditionViolated,
  TooSmall,
  // coloring / kempe
  ColorMismatch,
  BadColors,
  // birkhoff
  NotLockedInput,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kempe
