#include "trimnw/csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "trimnw/errors.hpp"

namespace trimnw {
namespace {

// splits raw CSV text into records of fields, honoring quotes and CRLF
std::vector<std::vector<std::string>> parse_csv(const std::string& text, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  const auto end_field = [&] {
    record.push_back(field);
    field.clear();
    field_started = false;
  };
  const auto end_record = [&] {
    end_field();
    records.push_back(record);
    record.clear();
  };

  for (std::size_t p = 0; p < text.size(); ++p) {
    const char c = text[p];
    if (in_quotes) {
      if (c == '"') {
        if (p + 1 < text.size() && text[p + 1] == '"') {
          field.push_back('"');
          ++p;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\r') {
      if (p + 1 < text.size() && text[p + 1] == '\n') ++p;
      end_record();
    } else if (c == '\n') {
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

std::string trimmed_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_number(const std::string& raw, double& out) {
  const std::string s = trimmed_copy(raw);
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size();
}

}  // namespace

loaded_sample load_csv(const dataset_spec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) raise(errc::file_not_found, "cannot open " + spec.path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto records = parse_csv(buf.str(), spec.delimiter);
  if (records.empty()) raise(errc::no_valid_rows, spec.path + " is empty");

  const auto& header = records.front();
  const auto find_column = [&](const std::string& name,
                               std::size_t fallback) -> std::size_t {
    if (name.empty()) {
      if (fallback >= header.size()) {
        raise(errc::column_missing,
              spec.path + ": header has fewer than " + std::to_string(fallback + 1) +
                  " columns");
      }
      return fallback;
    }
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (trimmed_copy(header[c]) == name) return c;
    }
    raise(errc::column_missing, "column '" + name + "' not found in " + spec.path);
  };
  const std::size_t xc = find_column(spec.x_column, 0);
  const std::size_t yc = find_column(spec.y_column, 1);

  loaded_sample out;
  out.x_column = trimmed_copy(header[xc]);
  out.y_column = trimmed_copy(header[yc]);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& row = records[r];
    if (row.size() == 1 && trimmed_copy(row[0]).empty()) continue;  // blank line
    double x = 0.0, y = 0.0;
    const bool ok = row.size() > std::max(xc, yc) && parse_number(row[xc], x) &&
                    parse_number(row[yc], y) &&
                    !(spec.na_sentinel && (x == *spec.na_sentinel || y == *spec.na_sentinel));
    if (!ok) {
      ++out.dropped_rows;
      continue;
    }
    out.sample.xs.push_back(x);
    out.sample.ys.push_back(y);
  }
  if (out.sample.size() == 0) {
    raise(errc::no_valid_rows, "no parsable rows in " + spec.path);
  }
  if (spec.scale_x) out.sample.xs = min_max_scale(out.sample.xs);
  return out;
}

std::vector<double> min_max_scale(const std::vector<double>& xs) {
  if (xs.empty()) raise(errc::constant_column, "cannot scale an empty column");
  const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *lo_it, hi = *hi_it;
  if (!(hi > lo)) {
    raise(errc::constant_column,
          "min-max scaling undefined: column is constant at " + std::to_string(lo));
  }
  std::vector<double> out(xs.size());
  const double span = hi - lo;
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = (xs[i] - lo) / span;
  return out;
}

}  // namespace trimnw
