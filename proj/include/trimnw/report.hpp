#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace trimnw {

inline constexpr const char* library_version = "0.1.0";

struct run_report {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::string timestamp;  // filled by current_timestamp()
  std::string version = library_version;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class report_format { json, csv };

// reals rendered with 10 significant digits
std::string format_real(double v);

// values quantized to 10 significant digits so serialization is deterministic
std::string emit_report(const run_report& report, report_format format);

run_report parse_report(const std::string& json_text);

// ISO-8601 UTC from SOURCE_DATE_EPOCH when set, else empty: reports never
// read the wall clock, keeping identical runs byte-identical
std::string current_timestamp();

}  // namespace trimnw
