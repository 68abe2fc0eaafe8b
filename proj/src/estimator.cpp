#include "trimnw/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "trimnw/asymptotics.hpp"
#include "trimnw/errors.hpp"

namespace trimnw {

ordered_sample order_pairs(const paired_sample& sample) {
  const std::size_t n = sample.size();
  if (n == 0) raise(errc::empty_sample, "cannot order an empty sample");
  if (sample.ys.size() != n) {
    throw std::invalid_argument("paired_sample: xs and ys lengths differ");
  }
  ordered_sample out;
  out.perm.resize(n);
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});
  std::stable_sort(out.perm.begin(), out.perm.end(),
                   [&](std::size_t a, std::size_t b) { return sample.xs[a] < sample.xs[b]; });
  out.x_ord.resize(n);
  out.y_conc.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.x_ord[k] = sample.xs[out.perm[k]];
    out.y_conc[k] = sample.ys[out.perm[k]];
  }
  return out;
}

std::size_t trim_count(std::size_t n, double alpha) {
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    raise(errc::degenerate_trim,
          "alpha must lie in [0, 0.5), got " + std::to_string(alpha));
  }
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * alpha));
}

trimmed_estimate trimmed_nw(const ordered_sample& ordered, double x0, double alpha,
                            const kernel_spec& kernel, double h) {
  const std::size_t n = ordered.size();
  if (n == 0) raise(errc::empty_sample, "cannot estimate from an empty sample");
  const std::size_t k = trim_count(n, alpha);
  if (2 * k >= n) {
    raise(errc::degenerate_trim, "n - 2 floor(n alpha) < 1 for n = " +
                                     std::to_string(n) + ", alpha = " +
                                     std::to_string(alpha));
  }
  double num = 0.0, den = 0.0;
  for (std::size_t i = k; i < n - k; ++i) {
    const double w = scaled_kernel(kernel, h, ordered.x_ord[i] - x0);
    num += w * ordered.y_conc[i];
    den += w;
  }
  if (den == 0.0) {
    raise(errc::empty_kernel_window,
          "no retained covariate within the kernel support around x0 = " +
              std::to_string(x0));
  }
  trimmed_estimate est;
  est.value = num / den;
  est.alpha = alpha;
  est.n_retained = n - 2 * k;
  est.denominator_mass = den;
  est.query_x = x0;
  return est;
}

trimmed_estimate trimmed_nw(const paired_sample& sample, double x0, double alpha,
                            const kernel_spec& kernel, const bandwidth_rule& bw) {
  const ordered_sample ordered = order_pairs(sample);
  return trimmed_nw(ordered, x0, alpha, kernel, bw.value_for(sample.size()));
}

trimmed_estimate nw(const paired_sample& sample, double x0, const kernel_spec& kernel,
                    const bandwidth_rule& bw) {
  return trimmed_nw(sample, x0, 0.0, kernel, bw);
}

double argmin_oracle(const paired_sample& sample, double x0, double alpha,
                     const kernel_spec& kernel, const bandwidth_rule& bw) {
  const std::size_t n = sample.size();
  if (n == 0) raise(errc::empty_sample, "cannot estimate from an empty sample");
  const ordered_sample ordered = order_pairs(sample);
  const std::size_t k = trim_count(n, alpha);
  if (2 * k >= n) {
    raise(errc::degenerate_trim, "n - 2 floor(n alpha) < 1");
  }
  const double h = bw.value_for(n);
  std::vector<double> w(n - 2 * k), y(n - 2 * k);
  double mass = 0.0;
  for (std::size_t i = k; i < n - k; ++i) {
    w[i - k] = scaled_kernel(kernel, h, ordered.x_ord[i] - x0);
    y[i - k] = ordered.y_conc[i];
    mass += w[i - k];
  }
  if (mass == 0.0) {
    raise(errc::empty_kernel_window, "no retained covariate within the kernel support");
  }
  // extended precision keeps the comparisons informative below the double
  // sqrt(eps) resolution floor of a quadratic bowl
  const auto objective = [&](long double theta) {
    long double s = 0.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const long double d = static_cast<long double>(y[i]) - theta;
      s += static_cast<long double>(w[i]) * d * d;
    }
    return s;
  };
  const double lo = *std::min_element(y.begin(), y.end()) - 1.0;
  const double hi = *std::max_element(y.begin(), y.end()) + 1.0;
  const long double invphi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double a = lo, b = hi;
  long double c = b - invphi * (b - a);
  long double d = a + invphi * (b - a);
  long double fc = objective(c), fd = objective(d);
  while (b - a > 1e-12L) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = objective(d);
    }
  }
  return static_cast<double>(0.5L * (a + b));
}

bias_term asymptotic_bias_term(double x0, std::size_t n, double alpha,
                               const kernel_spec& kernel, const bandwidth_rule& bw,
                               double g_prime, double g_second,
                               const covariate_law& law) {
  if (law.density(x0) == 0.0) {
    raise(errc::unsupported_point,
          "covariate density vanishes at x0 = " + std::to_string(x0));
  }
  const std::size_t k = trim_count(n, alpha);
  if (n == 0 || 2 * k >= n) raise(errc::degenerate_trim, "n - 2 floor(n alpha) < 1");
  const double h = bw.value_for(n);
  const double m = static_cast<double>(n - 2 * k);
  const order_stat_context ctx{law, n};
  double sum_f = 0.0, sum_fp = 0.0;
  for (std::size_t i = k + 1; i <= n - k; ++i) {
    sum_f += order_stat_density(ctx, i, x0);
    sum_fp += order_stat_density_derivative(ctx, i, x0);
  }
  bias_term out;
  out.value = h * h * second_moment_k2(kernel) *
              (g_second / (2.0 * m) * sum_f + g_prime / m * sum_fp);
  return out;
}

double asymptotic_variance(double x0, double alpha, double sigma2,
                           const kernel_spec& kernel, const covariate_law& law,
                           std::size_t approx_n) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  const order_stat_context ctx{law, approx_n};
  const double t = trimmed_density_average(ctx, alpha, x0);
  if (t <= 0.0) {
    raise(errc::unsupported_point,
          "t_alpha vanishes at x0 = " + std::to_string(x0));
  }
  return sigma2 * squared_l2_moment(kernel) / ((1.0 - 2.0 * alpha) * t);
}

}  // namespace trimnw
