#include "arbor/error.hpp"

namespace arbor {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Cycle: return "Cycle";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::MalformedPoly: return "MalformedPoly";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::InconsistentPoly: return "InconsistentPoly";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace arbor
