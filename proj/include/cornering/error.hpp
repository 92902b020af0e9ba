#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cornering {

enum class ErrorKind {
  UnknownGenerator,
  TypeMismatch,
  BoundaryMismatch,
  FactorizationRejected,
  DepthMismatch,
  GapOutOfRange,
  PatternMismatch,
  NotHomogeneous,
  LayoutLimitExceeded,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::FactorizationRejected: return "FactorizationRejected";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::GapOutOfRange: return "GapOutOfRange";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::LayoutLimitExceeded: return "LayoutLimitExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying a machine-readable
/// kind; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// BoundaryMismatch raised while validating a multi-part value; `index` is the
/// 1-based position of the offending tooth or component.
class IndexedError : public Error {
 public:
  IndexedError(ErrorKind kind, std::size_t index, const std::string& what)
      : Error(kind, what + " (at index " + std::to_string(index) + ")"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace cornering
