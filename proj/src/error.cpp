#include "softdx/error.hpp"

namespace softdx {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::ConfigMismatch: return "configuration mismatch";
    case ErrorKind::Config: return "configuration error";
    case ErrorKind::InvalidGrid: return "invalid grid";
    case ErrorKind::Incompatible: return "incompatible operands";
    case ErrorKind::Enumeration: return "enumeration error";
    case ErrorKind::MissingLabel: return "missing label";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

}  // namespace softdx
