#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slitsqueeze {

enum class ErrorKind {
  InvalidArgument,
  EmptyHoleList,
  HoleOutsideDisc,
  HolesOverlap,
  PoleHit,
  SingularMap,
  InvalidBoundaryIndex,
  BasePointOutsideDomain,
  PointOutsideAnnulus,
  ZeroArgument,
  NoConvergence,
  DenominatorZero,
  ProfileDegenerate,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a truncated product hits its cap without settling.  The
/// per-level (or per-term) relative updates are kept for diagnostics.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& message, std::vector<double> history)
      : Error(ErrorKind::NoConvergence, message), history_(std::move(history)) {}

  const std::vector<double>& history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace slitsqueeze
