#include "trimnw/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace trimnw {

double covariate_law::density(double x) const {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  switch (kind) {
    case covariate_kind::uniform01:
      return 1.0;
    case covariate_kind::beta22:
      return 6.0 * x * (1.0 - x);
  }
  return 0.0;
}

double covariate_law::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  switch (kind) {
    case covariate_kind::uniform01:
      return x;
    case covariate_kind::beta22:
      return x * x * (3.0 - 2.0 * x);
  }
  return 0.0;
}

double covariate_law::density_derivative(double x) const {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  switch (kind) {
    case covariate_kind::uniform01:
      return 0.0;
    case covariate_kind::beta22:
      return 6.0 - 12.0 * x;
  }
  return 0.0;
}

double error_law::variance() const {
  switch (kind) {
    case error_kind::std_normal:
      return 1.0;
    case error_kind::student_t5:
      return 5.0 / 3.0;
  }
  return 1.0;
}

double beta22_quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("beta22_quantile: u outside [0, 1]");
  }
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // safeguarded Newton on F(x) - u with F(x) = x^2 (3 - 2x), F'(x) = 6x(1-x)
  double lo = 0.0, hi = 1.0, x = 0.5;
  for (int iter = 0; iter < 100; ++iter) {
    const double F = x * x * (3.0 - 2.0 * x) - u;
    if (F > 0.0) hi = x; else lo = x;
    const double f = 6.0 * x * (1.0 - x);
    double next = x - F / f;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-16) { x = next; break; }
    x = next;
  }
  return x;
}

std::vector<double> sample_covariates(const covariate_law& law, seeded_rng& rng,
                                      std::size_t count) {
  std::vector<double> out(count);
  for (auto& v : out) {
    const double u = rng.uniform01();
    v = (law.kind == covariate_kind::uniform01) ? u : beta22_quantile(u);
  }
  return out;
}

std::vector<double> sample_errors(const error_law& law, seeded_rng& rng,
                                  std::size_t count) {
  std::vector<double> out(count);
  for (auto& v : out) {
    if (law.kind == error_kind::std_normal) {
      v = rng.normal();
    } else {
      // t5 = Z / sqrt(W/5), W ~ chi-squared(5)
      const double z = rng.normal();
      double w = 0.0;
      for (int k = 0; k < 5; ++k) {
        const double g = rng.normal();
        w += g * g;
      }
      v = z / std::sqrt(w / 5.0);
    }
  }
  return out;
}

}  // namespace trimnw
