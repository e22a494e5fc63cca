#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

enum class ErrorCode {
  Parse,
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  Cycle,
  Disconnected,
  NoEdges,
  CapExceeded,
  MalformedPoly,
  NotFound,
  InconsistentPoly,
  InvalidArgument,
};

/// Stable machine-readable name, e.g. "DuplicateEdge".
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace arbor
