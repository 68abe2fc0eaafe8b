#pragma once

#include <cstddef>
#include <vector>

#include "trimnw/rng.hpp"

namespace trimnw {

enum class covariate_kind { uniform01, beta22 };

// analytic covariate law on [0, 1]: density, CDF, density derivative
struct covariate_law {
  covariate_kind kind = covariate_kind::uniform01;

  double density(double x) const;
  double cdf(double x) const;
  double density_derivative(double x) const;
};

enum class error_kind { std_normal, student_t5 };

// homoscedastic error law with known variance
struct error_law {
  error_kind kind = error_kind::std_normal;

  double variance() const;  // 1 for normal, 5/3 for t5
};

// inverse CDF of Beta(2,2): solves 3x^2 - 2x^3 = u on [0,1]
double beta22_quantile(double u);

std::vector<double> sample_covariates(const covariate_law& law, seeded_rng& rng,
                                      std::size_t count);
std::vector<double> sample_errors(const error_law& law, seeded_rng& rng,
                                  std::size_t count);

}  // namespace trimnw
