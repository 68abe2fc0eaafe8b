#pragma once

#include <cstddef>
#include <vector>

#include "trimnw/distributions.hpp"
#include "trimnw/kernels.hpp"

namespace trimnw {

struct paired_sample {
  std::vector<double> xs;
  std::vector<double> ys;

  std::size_t size() const noexcept { return xs.size(); }
};

// order statistics of x with their concomitant y values
struct ordered_sample {
  std::vector<double> x_ord;   // nondecreasing
  std::vector<double> y_conc;  // y paired with x_ord
  std::vector<std::size_t> perm;  // original index of each ordered slot

  std::size_t size() const noexcept { return x_ord.size(); }
};

struct trimmed_estimate {
  double value = 0.0;
  double alpha = 0.0;
  std::size_t n_retained = 0;      // n - 2 floor(n alpha)
  double denominator_mass = 0.0;   // sum of retained scaled-kernel weights
  double query_x = 0.0;
};

// stable sort on x; ties keep original order
ordered_sample order_pairs(const paired_sample& sample);

// floor(n * alpha) with the [0, 1/2) domain check
std::size_t trim_count(std::size_t n, double alpha);

// weighted mean of the retained concomitants:
//   sum_{i=k+1}^{n-k} k_h(X_(i) - x0) Y_[i] / sum k_h(X_(i) - x0), k = floor(n alpha)
trimmed_estimate trimmed_nw(const ordered_sample& ordered, double x0, double alpha,
                            const kernel_spec& kernel, double h);
trimmed_estimate trimmed_nw(const paired_sample& sample, double x0, double alpha,
                            const kernel_spec& kernel, const bandwidth_rule& bw);

// classical estimator = trimmed_nw with alpha = 0
trimmed_estimate nw(const paired_sample& sample, double x0, const kernel_spec& kernel,
                    const bandwidth_rule& bw);

// independent check: minimizes sum of retained (y - theta)^2 weights by
// golden-section search instead of the closed form
double argmin_oracle(const paired_sample& sample, double x0, double alpha,
                     const kernel_spec& kernel, const bandwidth_rule& bw);

// h^2 k2 ( g''/(2m) sum f_(i)(x0) + g'/m sum f'_(i)(x0) ), m = n - 2 floor(n alpha);
// diagnostic centering term, never subtracted from estimates
struct bias_term {
  double value = 0.0;
};
bias_term asymptotic_bias_term(double x0, std::size_t n, double alpha,
                               const kernel_spec& kernel, const bandwidth_rule& bw,
                               double g_prime, double g_second,
                               const covariate_law& law);

// V = sigma2 * int K^2 / ((1 - 2 alpha) t_alpha(x0)) with t_alpha at finite approx_n
double asymptotic_variance(double x0, double alpha, double sigma2,
                           const kernel_spec& kernel, const covariate_law& law,
                           std::size_t approx_n);

}  // namespace trimnw
