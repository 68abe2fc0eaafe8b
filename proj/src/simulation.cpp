#include "trimnw/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trimnw/errors.hpp"

namespace trimnw {

double model_value(regression_model g, double x) {
  switch (g) {
    case regression_model::linear5x:
      return 5.0 * x;
    case regression_model::cubic4x3:
      return 4.0 * x * x * x;
  }
  return 0.0;
}

double population_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("population_variance: empty input");
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(n);
}

namespace {

void validate_alphas(const std::vector<double>& alphas, std::size_t n) {
  if (alphas.empty()) throw std::invalid_argument("alpha grid must be nonempty");
  for (const double a : alphas) {
    const std::size_t k = trim_count(n, a);
    if (2 * k >= n) {
      raise(errc::degenerate_trim, "alpha = " + std::to_string(a) +
                                       " retains no observation at n = " +
                                       std::to_string(n));
    }
  }
}

// variance at or below the squared rounding jitter of the mean is
// indistinguishable from zero: a constant response lands here
bool numerically_zero(double variance, const std::vector<double>& values) {
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  const double jitter =
      8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(mean));
  return variance <= jitter * jitter;
}

efficiency_report finish_report(std::vector<double> alphas,
                                const std::vector<double>& nw_values,
                                const std::vector<std::vector<double>>& trimmed_values) {
  efficiency_report rep;
  rep.alphas = std::move(alphas);
  rep.nw_variance = population_variance(nw_values);
  rep.trimmed_variances.reserve(rep.alphas.size());
  rep.ratios.reserve(rep.alphas.size());
  for (const auto& column : trimmed_values) {
    const double v = population_variance(column);
    rep.trimmed_variances.push_back(v);
    if (numerically_zero(rep.nw_variance, nw_values) || numerically_zero(v, column)) {
      raise(errc::degenerate_variance,
            "zero variance in the efficiency ratio (nw = " +
                std::to_string(rep.nw_variance) + ", trimmed = " + std::to_string(v) +
                ")");
    }
    rep.ratios.push_back(rep.nw_variance / v);
  }
  return rep;
}

}  // namespace

efficiency_report run_mc_efficiency(const regression_scenario& sc) {
  if (sc.n < 5) throw std::invalid_argument("scenario requires n >= 5");
  if (sc.replications < 2) throw std::invalid_argument("scenario requires N >= 2");
  validate_alphas(sc.alphas, sc.n);
  const double h = sc.bw.value_for(sc.n);

  std::vector<double> nw_values(sc.replications);
  std::vector<std::vector<double>> trimmed_values(
      sc.alphas.size(), std::vector<double>(sc.replications));

  for (std::size_t j = 0; j < sc.replications; ++j) {
    seeded_rng rng(sc.seed, j + 1);
    paired_sample sample;
    sample.xs = sample_covariates(sc.covariate, rng, sc.n);
    sample.ys = sample_errors(sc.error, rng, sc.n);
    for (std::size_t i = 0; i < sc.n; ++i) {
      sample.ys[i] += model_value(sc.g, sample.xs[i]);
    }
    const ordered_sample ordered = order_pairs(sample);
    try {
      nw_values[j] = trimmed_nw(ordered, sc.x0, 0.0, sc.kernel, h).value;
      for (std::size_t a = 0; a < sc.alphas.size(); ++a) {
        trimmed_values[a][j] = trimmed_nw(ordered, sc.x0, sc.alphas[a], sc.kernel, h).value;
      }
    } catch (const error& e) {
      if (e.code() == errc::empty_kernel_window) {
        raise(errc::replication_failed,
              "replication " + std::to_string(j + 1) + ": " + e.what());
      }
      throw;
    }
  }

  efficiency_report rep = finish_report(sc.alphas, nw_values, trimmed_values);
  rep.n = sc.n;
  rep.count = sc.replications;
  rep.x0 = sc.x0;
  rep.bandwidth = h;
  rep.seed = sc.seed;
  return rep;
}

efficiency_report run_bootstrap_efficiency(const paired_sample& data, std::size_t B,
                                           const std::vector<double>& alphas, double x0,
                                           const kernel_spec& kernel,
                                           const bandwidth_rule& bw, std::uint64_t seed) {
  const std::size_t n = data.size();
  if (n == 0) raise(errc::empty_sample, "bootstrap requires nonempty data");
  if (B < 2) throw std::invalid_argument("bootstrap requires B >= 2");
  validate_alphas(alphas, n);
  const double h = bw.value_for(n);

  std::vector<double> nw_values;
  std::vector<std::vector<double>> trimmed_values(alphas.size());
  nw_values.reserve(B);
  for (auto& column : trimmed_values) column.reserve(B);
  std::size_t dropped = 0;

  paired_sample resample;
  resample.xs.resize(n);
  resample.ys.resize(n);
  for (std::size_t b = 0; b < B; ++b) {
    seeded_rng rng(seed, b + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t idx = rng.next_index(n);
      resample.xs[i] = data.xs[idx];
      resample.ys[i] = data.ys[idx];
    }
    const ordered_sample ordered = order_pairs(resample);
    try {
      const double r = trimmed_nw(ordered, x0, 0.0, kernel, h).value;
      std::vector<double> row(alphas.size());
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        row[a] = trimmed_nw(ordered, x0, alphas[a], kernel, h).value;
      }
      nw_values.push_back(r);
      for (std::size_t a = 0; a < alphas.size(); ++a) {
        trimmed_values[a].push_back(row[a]);
      }
    } catch (const error& e) {
      if (e.code() == errc::empty_kernel_window) {
        ++dropped;
        continue;
      }
      raise(errc::resample_failed, "resample " + std::to_string(b + 1) + ": " + e.what());
    }
  }
  if (dropped > B / 2) {
    raise(errc::unestimable_query,
          std::to_string(dropped) + " of " + std::to_string(B) +
              " resamples had an empty kernel window at x0 = " + std::to_string(x0));
  }

  efficiency_report rep = finish_report(alphas, nw_values, trimmed_values);
  rep.n = n;
  rep.count = B - dropped;
  rep.x0 = x0;
  rep.bandwidth = h;
  rep.seed = seed;
  rep.dropped = dropped;
  return rep;
}

double breakdown_bias(const paired_sample& sample, const contamination_plan& plan,
                      double x0, double alpha, const kernel_spec& kernel,
                      const bandwidth_rule& bw) {
  const std::size_t n = sample.size();
  if (n == 0) raise(errc::empty_sample, "breakdown probe requires nonempty data");
  if (plan.m > n) throw std::invalid_argument("contamination count m exceeds n");
  if (!(plan.magnitude > 0.0)) throw std::invalid_argument("magnitude must be positive");

  const double clean = trimmed_nw(sample, x0, alpha, kernel, bw).value;
  if (plan.m == 0) return 0.0;

  const std::size_t k = trim_count(n, alpha);
  const ordered_sample ordered = order_pairs(sample);
  paired_sample corrupted = sample;
  const std::size_t tail = std::min(plan.m, k);
  // replace the largest-x pairs first; they occupy the trimmed upper tail
  for (std::size_t j = 0; j < plan.m; ++j) {
    const std::size_t victim = ordered.perm[n - 1 - j];
    if (j < tail) {
      corrupted.xs[victim] = plan.magnitude;
      corrupted.ys[victim] = plan.magnitude;
    } else {
      corrupted.xs[victim] = x0;
      corrupted.ys[victim] = plan.magnitude;
    }
  }
  const double dirty = trimmed_nw(corrupted, x0, alpha, kernel, bw).value;
  return std::fabs(dirty - clean);
}

breakdown_result empirical_breakdown_point(const paired_sample& sample, double x0,
                                           double alpha, const kernel_spec& kernel,
                                           const bandwidth_rule& bw, double threshold,
                                           double magnitude) {
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  const std::size_t n = sample.size();
  breakdown_result result;
  result.n = n;
  for (std::size_t m = 0; m <= n; ++m) {
    const double bias = breakdown_bias(sample, {m, magnitude}, x0, alpha, kernel, bw);
    result.bias_curve.push_back(bias);
    if (bias > threshold) {
      result.m_star = m;
      return result;
    }
  }
  raise(errc::no_breakdown_detected,
        "no contamination count up to n = " + std::to_string(n) +
            " moved the estimate beyond the threshold");
}

}  // namespace trimnw
