#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimnw/estimator.hpp"

namespace trimnw {

struct dataset_spec {
  std::string path;
  std::string x_column;  // empty: first column
  std::string y_column;  // empty: second column
  bool scale_x = false;  // min-max scale x to [0, 1]
  char delimiter = ',';
  std::optional<double> na_sentinel;  // rows equal to this value are dropped
};

struct loaded_sample {
  paired_sample sample;
  std::size_t dropped_rows = 0;  // missing, non-numeric, or sentinel entries
  std::string x_column;
  std::string y_column;
};

// RFC-4180-style parsing: header row required, quoted fields, CR/LF endings
loaded_sample load_csv(const dataset_spec& spec);

// x* = (x - min) / (max - min)
std::vector<double> min_max_scale(const std::vector<double>& xs);

}  // namespace trimnw
