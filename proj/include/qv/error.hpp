#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Failure categories surfaced to callers and mapped to CLI exit codes.
// Domain errors (bad mathematical input) and usage errors (bad invocation)
// are distinguished by the CLI layer, not here.
enum class ErrorKind {
  UnknownVertex,
  DuplicateVertexId,
  ZeroVector,
  Unsupported,
  InvalidStability,
  InvalidParams,
  ShapeMismatch,
  NotAllOnes,
  TooLarge,
  CapExceeded,
  NotAnExtension,
  NotUpwardClosed,
  NegativeCycle,
  NoOutgoingPath,
  PreconditionViolated,
  Internal,
};

const char* to_string(ErrorKind kind);

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& message)
      : std::runtime_error(std::string(to_string(k)) + ": " + message), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& message) {
  throw Error(k, message);
}

inline void require(bool ok, ErrorKind k, const std::string& message) {
  if (!ok) fail(k, message);
}

}  // namespace qv
