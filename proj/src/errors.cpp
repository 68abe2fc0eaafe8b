#include "trimnw/errors.hpp"

namespace trimnw {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_bandwidth: return "invalid_bandwidth";
    case errc::empty_sample: return "empty_sample";
    case errc::empty_kernel_window: return "empty_kernel_window";
    case errc::degenerate_trim: return "degenerate_trim";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::unsupported_point: return "unsupported_point";
    case errc::replication_failed: return "replication_failed";
    case errc::resample_failed: return "resample_failed";
    case errc::unestimable_query: return "unestimable_query";
    case errc::degenerate_variance: return "degenerate_variance";
    case errc::no_breakdown_detected: return "no_breakdown_detected";
    case errc::file_not_found: return "file_not_found";
    case errc::column_missing: return "column_missing";
    case errc::no_valid_rows: return "no_valid_rows";
    case errc::constant_column: return "constant_column";
  }
  return "unknown";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

bool error::is_input_error() const noexcept {
  switch (code_) {
    case errc::unestimable_query:
    case errc::degenerate_variance:
    case errc::file_not_found:
    case errc::column_missing:
    case errc::no_valid_rows:
    case errc::constant_column:
      return true;
    default:
      return false;
  }
}

void raise(errc code, const std::string& message) { throw error(code, message); }

}  // namespace trimnw
