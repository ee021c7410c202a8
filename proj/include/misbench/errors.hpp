#pragma once

#include <stdexcept>
#include <string>

namespace misbench {

// Error codes for everything the library can reject. The names are part of
// the tool's output contract: failure records and CLI messages print them
// verbatim via error_name().
enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  malformed_header,
  edge_count_mismatch,
  infeasible_parity,
  degree_too_large,
  restart_limit_exceeded,
  too_large,
  no_bound_for_degree,
  insufficient_points,
  unknown_format,
  invalid_parameter,
  io_error,
};

const char* error_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Parameter/usage class errors exit with status 2 at the CLI; everything
// else is a runtime failure (status 1).
bool is_usage_error(errc code);

}  // namespace misbench
