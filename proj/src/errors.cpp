#include "misbench/errors.hpp"

namespace misbench {

const char* error_name(errc code) {
  switch (code) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::malformed_header: return "MalformedHeader";
    case errc::edge_count_mismatch: return "EdgeCountMismatch";
    case errc::infeasible_parity: return "InfeasibleParity";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::restart_limit_exceeded: return "RestartLimitExceeded";
    case errc::too_large: return "TooLarge";
    case errc::no_bound_for_degree: return "NoBoundForDegree";
    case errc::insufficient_points: return "InsufficientPoints";
    case errc::unknown_format: return "UnknownFormat";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

bool is_usage_error(errc code) {
  switch (code) {
    case errc::self_loop:
    case errc::duplicate_edge:
    case errc::vertex_out_of_range:
    case errc::malformed_header:
    case errc::edge_count_mismatch:
    case errc::infeasible_parity:
    case errc::degree_too_large:
    case errc::too_large:
    case errc::no_bound_for_degree:
    case errc::insufficient_points:
    case errc::unknown_format:
    case errc::invalid_parameter:
      return true;
    case errc::restart_limit_exceeded:
    case errc::io_error:
      return false;
  }
  return false;
}

}  // namespace misbench
