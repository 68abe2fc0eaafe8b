#include "trimnw/kernels.hpp"

#include <cmath>
#include <string>

#include "trimnw/errors.hpp"

namespace trimnw {

kernel_spec make_kernel(kernel_kind kind, double support_tau) {
  if (!(support_tau > 0.0) || !std::isfinite(support_tau)) {
    raise(errc::invalid_bandwidth, "kernel support must be positive, got " +
                                       std::to_string(support_tau));
  }
  return kernel_spec{kind, support_tau};
}

double evaluate(const kernel_spec& kernel, double u) {
  const double tau = kernel.support_tau;
  const double v = u / tau;
  if (std::fabs(v) > 1.0) return 0.0;
  switch (kernel.kind) {
    case kernel_kind::epanechnikov:
      return 0.75 * (1.0 - v * v) / tau;
    case kernel_kind::uniform:
      return 0.5 / tau;
    case kernel_kind::triangular:
      return (1.0 - std::fabs(v)) / tau;
  }
  return 0.0;
}

double scaled_kernel(const kernel_spec& kernel, double h, double t) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    raise(errc::invalid_bandwidth, "h must be positive, got " + std::to_string(h));
  }
  return evaluate(kernel, t / h) / h;
}

double squared_l2_moment(const kernel_spec& kernel) {
  const double tau = kernel.support_tau;
  switch (kernel.kind) {
    case kernel_kind::epanechnikov:
      return 3.0 / (5.0 * tau);
    case kernel_kind::uniform:
      return 1.0 / (2.0 * tau);
    case kernel_kind::triangular:
      return 2.0 / (3.0 * tau);
  }
  return 0.0;
}

double second_moment_k2(const kernel_spec& kernel) {
  const double tau = kernel.support_tau;
  switch (kernel.kind) {
    case kernel_kind::epanechnikov:
      return tau * tau / 5.0;
    case kernel_kind::uniform:
      return tau * tau / 3.0;
    case kernel_kind::triangular:
      return tau * tau / 6.0;
  }
  return 0.0;
}

bandwidth_rule bandwidth_rule::fixed(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    raise(errc::invalid_bandwidth, "fixed bandwidth must be positive, got " +
                                       std::to_string(h));
  }
  bandwidth_rule r;
  r.rule = kind::fixed;
  r.fixed_value = h;
  return r;
}

bandwidth_rule bandwidth_rule::sqrt_rate() {
  bandwidth_rule r;
  r.rule = kind::sqrt_rate;
  return r;
}

bandwidth_rule bandwidth_rule::rule_of_thumb() {
  bandwidth_rule r;
  r.rule = kind::rule_of_thumb;
  return r;
}

double bandwidth_rule::value_for(std::size_t n) const {
  double h = 0.0;
  switch (rule) {
    case kind::fixed:
      h = fixed_value;
      break;
    case kind::sqrt_rate:
      h = 0.5 / std::sqrt(static_cast<double>(n));
      break;
    case kind::rule_of_thumb:
      h = 0.6 * std::pow(static_cast<double>(n), -0.2);
      break;
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    raise(errc::invalid_bandwidth,
          "bandwidth rule produced non-positive h for n = " + std::to_string(n));
  }
  return h;
}

}  // namespace trimnw
