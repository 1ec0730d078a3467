#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace outrank {

enum class ErrorKind {
  InvalidInput,
  NotFound,
  Configuration,
  Schema,
  Parse,
  Duplicate,
  Validation,
  UndefinedCorrelation,
  Degenerate,
  InvalidRequest,
  InternalInvariant,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::NotFound: return "not_found";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Duplicate: return "duplicate";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::UndefinedCorrelation: return "undefined_correlation";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::InvalidRequest: return "invalid_request";
    case ErrorKind::InternalInvariant: return "internal_invariant";
  }
  return "unknown";
}

// Every failure raised by the library carries a kind so callers (CLI, HTTP
// layer) can map it to an exit status or response code without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace outrank
