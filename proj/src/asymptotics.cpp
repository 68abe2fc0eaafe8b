#include "trimnw/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trimnw/errors.hpp"
#include "trimnw/estimator.hpp"

namespace trimnw {
namespace {

double log_coefficient(std::size_t n, std::size_t i) {
  const double nn = static_cast<double>(n);
  const double ii = static_cast<double>(i);
  return std::lgamma(nn + 1.0) - std::lgamma(ii) - std::lgamma(nn - ii + 1.0);
}

void check_index(const order_stat_context& ctx, std::size_t i) {
  if (i < 1 || i > ctx.n) {
    raise(errc::index_out_of_range, "order statistic index " + std::to_string(i) +
                                        " outside [1, " + std::to_string(ctx.n) + "]");
  }
}

}  // namespace

double order_stat_density(const order_stat_context& ctx, std::size_t i, double x) {
  check_index(ctx, i);
  const double f = ctx.law.density(x);
  if (f == 0.0) return 0.0;
  const std::size_t n = ctx.n;
  const double F = ctx.law.cdf(x);
  double logv = log_coefficient(n, i);
  if (i > 1) {
    if (F <= 0.0) return 0.0;
    logv += static_cast<double>(i - 1) * std::log(F);
  }
  if (i < n) {
    if (F >= 1.0) return 0.0;
    logv += static_cast<double>(n - i) * std::log1p(-F);
  }
  return std::exp(logv) * f;
}

double order_stat_density_derivative(const order_stat_context& ctx, std::size_t i,
                                     double x) {
  check_index(ctx, i);
  const std::size_t n = ctx.n;
  const double f = ctx.law.density(x);
  const double fp = ctx.law.density_derivative(x);
  const double F = ctx.law.cdf(x);
  const double logc = log_coefficient(n, i);

  // three addends of the product rule, each as (log magnitude, sign):
  //   (i-1) F^{i-2} (1-F)^{n-i} f^2  -  (n-i) F^{i-1} (1-F)^{n-i-1} f^2
  //   + F^{i-1} (1-F)^{n-i} f'
  struct term {
    double logmag;
    double sign;
  };
  term terms[3];
  int count = 0;
  const double neg_inf = -std::numeric_limits<double>::infinity();

  const auto log_pow = [&](double base, double exponent) {
    if (exponent == 0.0) return 0.0;
    if (base <= 0.0) return neg_inf;
    return exponent * std::log(base);
  };

  if (i >= 2 && f != 0.0) {
    const double lm = logc + std::log(static_cast<double>(i - 1)) +
                      log_pow(F, static_cast<double>(i - 2)) +
                      log_pow(1.0 - F, static_cast<double>(n - i)) +
                      2.0 * std::log(std::fabs(f));
    if (lm != neg_inf) terms[count++] = {lm, 1.0};
  }
  if (i <= n - 1 && f != 0.0) {
    const double lm = logc + std::log(static_cast<double>(n - i)) +
                      log_pow(F, static_cast<double>(i - 1)) +
                      log_pow(1.0 - F, static_cast<double>(n - i - 1)) +
                      2.0 * std::log(std::fabs(f));
    if (lm != neg_inf) terms[count++] = {lm, -1.0};
  }
  if (fp != 0.0) {
    const double lm = logc + log_pow(F, static_cast<double>(i - 1)) +
                      log_pow(1.0 - F, static_cast<double>(n - i)) +
                      std::log(std::fabs(fp));
    if (lm != neg_inf) terms[count++] = {lm, fp > 0.0 ? 1.0 : -1.0};
  }
  if (count == 0) return 0.0;

  double maxlog = terms[0].logmag;
  for (int t = 1; t < count; ++t) maxlog = std::max(maxlog, terms[t].logmag);
  double s = 0.0;
  for (int t = 0; t < count; ++t) s += terms[t].sign * std::exp(terms[t].logmag - maxlog);
  return s * std::exp(maxlog);
}

double mixture_identity_residual(const order_stat_context& ctx, double x) {
  double sum = 0.0;
  for (std::size_t i = 1; i <= ctx.n; ++i) sum += order_stat_density(ctx, i, x);
  return std::fabs(sum / static_cast<double>(ctx.n) - ctx.law.density(x));
}

double trimmed_density_average(const order_stat_context& ctx, double alpha, double x) {
  const std::size_t n = ctx.n;
  const std::size_t k = trim_count(n, alpha);
  if (n == 0 || 2 * k >= n) {
    raise(errc::degenerate_trim, "n - 2 floor(n alpha) < 1 for approx_n = " +
                                     std::to_string(n));
  }
  double sum = 0.0;
  for (std::size_t i = k + 1; i <= n - k; ++i) sum += order_stat_density(ctx, i, x);
  return sum / static_cast<double>(n - 2 * k);
}

double asymptotic_efficiency(const order_stat_context& ctx, double alpha, double x) {
  const double f = ctx.law.density(x);
  if (f <= 0.0) {
    raise(errc::unsupported_point,
          "covariate density vanishes at x = " + std::to_string(x));
  }
  return (1.0 - 2.0 * alpha) * trimmed_density_average(ctx, alpha, x) / f;
}

efficiency_curve ae_curve(const order_stat_context& ctx, const std::vector<double>& alphas,
                          double x) {
  efficiency_curve curve;
  curve.alphas = alphas;
  curve.values.reserve(alphas.size());
  curve.x0 = x;
  curve.approx_n = ctx.n;
  for (const double a : alphas) {
    try {
      curve.values.push_back(asymptotic_efficiency(ctx, a, x));
    } catch (const error& e) {
      raise(e.code(), "alpha = " + std::to_string(a) + ": " + e.what());
    }
  }
  return curve;
}

}  // namespace trimnw
