#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snest {

enum class ErrorKind {
  dimension_overflow,
  dimension_mismatch,
  not_hermitian,
  invalid_argument,
  count_mismatch,
  scheme_dimension_mismatch,
  degenerate,
  t_out_of_range,
  psd_violation,
  not_informationally_complete,
  not_a_sic,
  invalid_state,
  imaginary_residue,
  window_violation,
  no_sign_change,
  parse_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace snest
