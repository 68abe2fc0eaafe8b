#pragma once

#include <cstddef>

namespace trimnw {

enum class kernel_kind { epanechnikov, uniform, triangular };

// symmetric kernel density supported on [-tau, tau]
struct kernel_spec {
  kernel_kind kind = kernel_kind::epanechnikov;
  double support_tau = 1.0;
};

kernel_spec make_kernel(kernel_kind kind, double support_tau = 1.0);

double evaluate(const kernel_spec& kernel, double u);

// k_n(t) = (1/h) K(t/h)
double scaled_kernel(const kernel_spec& kernel, double h, double t);

// int K(u)^2 du
double squared_l2_moment(const kernel_spec& kernel);

// k2 = int u^2 K(u) du
double second_moment_k2(const kernel_spec& kernel);

// bandwidth selection: an explicit value or a rate in the sample size.
// sqrt_rate      h = n^{-1/2}/2   (undersmoothing rate; point-estimation default)
// rule_of_thumb  h = 0.6 n^{-1/5} (smoothing-rate default for efficiency studies)
struct bandwidth_rule {
  enum class kind { fixed, sqrt_rate, rule_of_thumb };

  kind rule = kind::sqrt_rate;
  double fixed_value = 0.0;

  static bandwidth_rule fixed(double h);
  static bandwidth_rule sqrt_rate();
  static bandwidth_rule rule_of_thumb();

  double value_for(std::size_t n) const;
};

}  // namespace trimnw
