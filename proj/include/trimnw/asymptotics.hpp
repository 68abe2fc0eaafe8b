#pragma once

#include <cstddef>
#include <vector>

#include "trimnw/distributions.hpp"

namespace trimnw {

struct order_stat_context {
  covariate_law law;
  std::size_t n = 1;  // approximation sample size
};

// f_(i)(x) = n!/((i-1)!(n-i)!) F^{i-1} (1-F)^{n-i} f, computed in log space; i is 1-based
double order_stat_density(const order_stat_context& ctx, std::size_t i, double x);

// analytic derivative of order_stat_density in log-magnitude + sign form
double order_stat_density_derivative(const order_stat_context& ctx, std::size_t i,
                                     double x);

// |(1/n) sum_i f_(i)(x) - f(x)|; the order-statistic densities average to the
// parent density, so this residual is numerical noise only
double mixture_identity_residual(const order_stat_context& ctx, double x);

// t_alpha: trimmed average of order-statistic densities,
// (1/(n-2k)) sum_{i=k+1}^{n-k} f_(i)(x), k = floor(n alpha)
double trimmed_density_average(const order_stat_context& ctx, double alpha, double x);

// AE = (1 - 2 alpha) t_alpha(x) / f(x), always <= 1
double asymptotic_efficiency(const order_stat_context& ctx, double alpha, double x);

struct efficiency_curve {
  std::vector<double> alphas;
  std::vector<double> values;
  double x0 = 0.0;
  std::size_t approx_n = 0;
};

efficiency_curve ae_curve(const order_stat_context& ctx, const std::vector<double>& alphas,
                          double x);

}  // namespace trimnw
