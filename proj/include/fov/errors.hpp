#pragma once

#include <stdexcept>
#include <string>

namespace fov {

enum class Errc {
  non_hermitian,
  no_convergence,
  non_square,
  zero_component,
  index_out_of_range,
  nonzero_deleted_entry,
  too_small,
  not_unit,
  dimension_mismatch,
  not_orthogonal,
  empty_input,
  degenerate,
  not_normal,
  bad_split,
  midpoint_assertion_failed,
  parse_error,
  shape_error,
  io_error,
  invalid_argument,
};

const char* errc_name(Errc code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fov
