#pragma once

#include <stdexcept>
#include <string>

namespace trimnw {

enum class errc {
  invalid_bandwidth,
  empty_sample,
  empty_kernel_window,
  degenerate_trim,
  index_out_of_range,
  unsupported_point,
  replication_failed,
  resample_failed,
  unestimable_query,
  degenerate_variance,
  no_breakdown_detected,
  file_not_found,
  column_missing,
  no_valid_rows,
  constant_column,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }
  // input errors (bad files, bad columns) map to CLI exit 2,
  // numerical/degenerate conditions to exit 3
  bool is_input_error() const noexcept;

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& message);

}  // namespace trimnw
