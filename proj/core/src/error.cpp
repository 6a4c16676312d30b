#include "rlw/error.hpp"

namespace rlw {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidBits: return "invalid-bits";
    case ErrorKind::OrderViolation: return "order-violation";
    case ErrorKind::Range: return "range";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NotGenerable: return "not-generable";
    case ErrorKind::PaletteCollision: return "palette-collision";
    case ErrorKind::PaletteInfinite: return "palette-infinite";
    case ErrorKind::InconsistentModel: return "inconsistent-model";
    case ErrorKind::MissingSubvalue: return "missing-subvalue";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace rlw
