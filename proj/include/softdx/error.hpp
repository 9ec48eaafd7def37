#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace softdx {

enum class ErrorKind {
  InvalidInput,     // non-finite values, bad thresholds
  ConfigMismatch,   // a record lacks a configured variable
  Config,           // unknown variable/term, malformed configuration
  InvalidGrid,      // α-grid not strictly increasing in (0, 1]
  Incompatible,     // soft sets over different universes
  Enumeration,      // a variable contributes no nonempty soft set
  MissingLabel,     // matched patient without a label
  Parse,            // malformed dataset/config/artifact text
  Validation,       // well-formed input violating a contract (duplicate ids, digest mismatch)
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Recoverable, user-facing failure. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  // Message without the kind prefix carried by what().
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

// Internal invariant broken. The CLI maps these to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define SOFTDX_ENSURE(cond, msg)                                   \
  do {                                                             \
    if (!(cond)) throw ::softdx::InvariantViolation(std::string(msg)); \
  } while (0)

}  // namespace softdx
