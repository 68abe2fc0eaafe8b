#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trimnw/distributions.hpp"
#include "trimnw/estimator.hpp"
#include "trimnw/kernels.hpp"

namespace trimnw {

enum class regression_model { linear5x, cubic4x3 };

double model_value(regression_model g, double x);

struct regression_scenario {
  regression_model g = regression_model::linear5x;
  error_law error{};
  covariate_law covariate{};
  std::size_t n = 50;
  double x0 = 0.5;
  std::vector<double> alphas;
  std::size_t replications = 1000;
  kernel_spec kernel{};
  bandwidth_rule bw = bandwidth_rule::rule_of_thumb();
  std::uint64_t seed = 0;
};

struct efficiency_report {
  std::vector<double> alphas;
  std::vector<double> ratios;             // var(nw values) / var(trimmed values)
  double nw_variance = 0.0;               // numerator, shared across alphas
  std::vector<double> trimmed_variances;  // denominators
  std::size_t n = 0;
  std::size_t count = 0;  // replications or resamples used
  double x0 = 0.0;
  double bandwidth = 0.0;
  std::uint64_t seed = 0;
  std::size_t dropped = 0;  // bootstrap resamples skipped for empty windows
};

// population (1/N) variance, matching the displayed efficiency ratio
double population_variance(std::span<const double> values);

// Monte-Carlo finite-sample efficiency: replication j draws covariates and
// errors from stream j, evaluates the trimmed estimator per alpha and the
// untrimmed reference at x0, then forms per-alpha variance ratios.
// A replication with an empty kernel window aborts the run (replication_failed).
efficiency_report run_mc_efficiency(const regression_scenario& sc);

// bootstrap analog over B resamples with replacement (stream b per resample);
// resamples raising empty_kernel_window for any alpha are dropped whole with
// the count reported; more than B/2 drops raises unestimable_query
efficiency_report run_bootstrap_efficiency(const paired_sample& data, std::size_t B,
                                           const std::vector<double>& alphas, double x0,
                                           const kernel_spec& kernel,
                                           const bandwidth_rule& bw, std::uint64_t seed);

struct contamination_plan {
  std::size_t m = 0;        // pairs replaced
  double magnitude = 1e9;   // contamination size
};

// worst-case contamination bias: the min(m, floor(n alpha)) largest-x pairs are
// replaced by (magnitude, magnitude) (they land in the trimmed tail, so the
// estimate is unchanged while m <= floor(n alpha)); any excess pairs are placed
// at (x0, magnitude) inside the kernel window, driving the estimate unbounded.
// Returns |estimate(contaminated) - estimate(clean)|.
double breakdown_bias(const paired_sample& sample, const contamination_plan& plan,
                      double x0, double alpha, const kernel_spec& kernel,
                      const bandwidth_rule& bw);

struct breakdown_result {
  std::size_t m_star = 0;  // smallest m with bias > threshold
  std::size_t n = 0;       // ratio = m_star / n
  std::vector<double> bias_curve;  // bias at m = 0 .. m_star
};

breakdown_result empirical_breakdown_point(const paired_sample& sample, double x0,
                                           double alpha, const kernel_spec& kernel,
                                           const bandwidth_rule& bw, double threshold,
                                           double magnitude = 1e9);

}  // namespace trimnw
