#include "snest/error.hpp"

namespace snest {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_overflow: return "dimension-overflow";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::not_hermitian: return "not-hermitian";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::count_mismatch: return "count-mismatch";
    case ErrorKind::scheme_dimension_mismatch: return "scheme-dimension-mismatch";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::t_out_of_range: return "t-out-of-range";
    case ErrorKind::psd_violation: return "psd-violation";
    case ErrorKind::not_informationally_complete: return "not-informationally-complete";
    case ErrorKind::not_a_sic: return "not-a-sic";
    case ErrorKind::invalid_state: return "invalid-state";
    case ErrorKind::imaginary_residue: return "imaginary-residue";
    case ErrorKind::window_violation: return "window-violation";
    case ErrorKind::no_sign_change: return "no-sign-change";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace snest
