#include "qv/error.hpp"

namespace qv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "unknown vertex";
    case ErrorKind::DuplicateVertexId: return "duplicate vertex id";
    case ErrorKind::ZeroVector: return "zero vector";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InvalidStability: return "invalid stability";
    case ErrorKind::InvalidParams: return "invalid parameters";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::NotAllOnes: return "dimension vector is not all ones";
    case ErrorKind::TooLarge: return "instance too large";
    case ErrorKind::CapExceeded: return "enumeration cap exceeded";
    case ErrorKind::NotAnExtension: return "not an extension";
    case ErrorKind::NotUpwardClosed: return "family is not upward closed";
    case ErrorKind::NegativeCycle: return "negative cycle";
    case ErrorKind::NoOutgoingPath: return "no outgoing path";
    case ErrorKind::PreconditionViolated: return "precondition violated";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace qv
