#include "trimnw/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <sstream>

namespace trimnw {
namespace {

double quantize(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return std::strtod(buf, nullptr);
}

nlohmann::ordered_json quantize_json(const nlohmann::ordered_json& j) {
  if (j.is_number_float()) return quantize(j.get<double>());
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [key, value] : j.items()) out[key] = quantize_json(value);
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& value : j) out.push_back(quantize_json(value));
    return out;
  }
  return j;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string emit_report(const run_report& report, report_format format) {
  if (format == report_format::csv) {
    std::ostringstream out;
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      if (c) out << ',';
      out << report.columns[c];
    }
    out << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << format_real(row[c]);
      }
      out << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["parameters"] = quantize_json(report.parameters);
  j["seed"] = report.seed;
  j["timestamp"] = report.timestamp;
  j["version"] = report.version;
  nlohmann::ordered_json results;
  results["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const double v : row) r.push_back(quantize(v));
    rows.push_back(r);
  }
  results["rows"] = rows;
  j["results"] = results;
  return j.dump(2) + "\n";
}

run_report parse_report(const std::string& json_text) {
  const auto j = nlohmann::ordered_json::parse(json_text);
  run_report report;
  report.command = j.at("command").get<std::string>();
  report.parameters = j.at("parameters");
  report.seed = j.at("seed").get<std::uint64_t>();
  report.timestamp = j.at("timestamp").get<std::string>();
  report.version = j.at("version").get<std::string>();
  report.columns = j.at("results").at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("results").at("rows")) {
    report.rows.push_back(row.get<std::vector<double>>());
  }
  return report;
}

std::string current_timestamp() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch == nullptr || *epoch == '\0') return "";
  char* end = nullptr;
  const long long t = std::strtoll(epoch, &end, 10);
  if (end == epoch || *end != '\0') return "";
  const std::time_t tt = static_cast<std::time_t>(t);
  std::tm tm{};
  if (gmtime_r(&tt, &tm) == nullptr) return "";
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace trimnw
