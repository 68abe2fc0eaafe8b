#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "trimnw/distributions.hpp"
#include "trimnw/rng.hpp"

using namespace trimnw;

namespace {
const covariate_law u01{covariate_kind::uniform01};
const covariate_law b22{covariate_kind::beta22};
}  // namespace

TEST_CASE("uniform law point values") {
  CHECK(u01.density(0.5) == 1.0);
  CHECK(u01.density(-0.1) == 0.0);
  CHECK(u01.density(1.1) == 0.0);
  CHECK(u01.cdf(0.25) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(u01.cdf(-1.0) == 0.0);
  CHECK(u01.cdf(2.0) == 1.0);
  CHECK(u01.density_derivative(0.3) == 0.0);
}

TEST_CASE("beta(2,2) law point values") {
  CHECK(b22.density(0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b22.density(0.25) == doctest::Approx(6.0 * 0.25 * 0.75).epsilon(1e-15));
  CHECK(b22.density(0.0) == 0.0);
  CHECK(b22.density(1.0) == 0.0);
  CHECK(b22.cdf(0.25) == doctest::Approx(0.15625).epsilon(1e-15));
  CHECK(b22.cdf(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(b22.density_derivative(0.25) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(b22.density_derivative(0.75) == doctest::Approx(-3.0).epsilon(1e-15));
}

TEST_CASE("density derivative matches finite differences") {
  const double eps = 1e-6;
  for (const auto& law : {u01, b22}) {
    for (const double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double fd = (law.density(x + eps) - law.density(x - eps)) / (2.0 * eps);
      CHECK(law.density_derivative(x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("cdf is the integral of the density") {
  // midpoint rule avoids the support endpoints, where the density is defined
  // to vanish
  for (const auto& law : {u01, b22}) {
    for (const double x : {0.1, 0.25, 0.5, 0.8}) {
      double acc = 0.0;
      const std::size_t cells = 20000;
      const double dx = x / static_cast<double>(cells);
      for (std::size_t i = 0; i < cells; ++i) {
        acc += law.density((static_cast<double>(i) + 0.5) * dx) * dx;
      }
      CHECK(law.cdf(x) == doctest::Approx(acc).epsilon(1e-6));
    }
  }
}

TEST_CASE("beta(2,2) quantile inverts the cdf") {
  for (const double u : {1e-9, 0.01, 0.15625, 0.3, 0.5, 0.77, 0.99, 1.0 - 1e-9}) {
    const double x = beta22_quantile(u);
    CHECK(b22.cdf(x) == doctest::Approx(u).epsilon(1e-12));
  }
  CHECK(beta22_quantile(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(beta22_quantile(0.0) == 0.0);
  CHECK(beta22_quantile(1.0) == 1.0);
}

TEST_CASE("error law variances") {
  CHECK(error_law{error_kind::std_normal}.variance() == 1.0);
  CHECK(error_law{error_kind::student_t5}.variance() ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("sampled covariate moments") {
  const std::size_t n = 1000000;
  seeded_rng rng(12345, 0);
  const auto us = sample_covariates(u01, rng, n);
  double mean = 0.0;
  for (const double v : us) mean += v;
  mean /= static_cast<double>(n);
  CHECK(mean == doctest::Approx(0.5).epsilon(0.002));
  double var = 0.0;
  for (const double v : us) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.01));

  seeded_rng rng2(12345, 1);
  const auto bs = sample_covariates(b22, rng2, n);
  double bmean = 0.0;
  for (const double v : bs) bmean += v;
  bmean /= static_cast<double>(n);
  CHECK(bmean == doctest::Approx(0.5).epsilon(0.002));
  double bvar = 0.0;
  for (const double v : bs) bvar += (v - bmean) * (v - bmean);
  bvar /= static_cast<double>(n);
  CHECK(bvar == doctest::Approx(0.05).epsilon(0.01));
}

TEST_CASE("sampled error moments") {
  const std::size_t n = 1000000;
  seeded_rng rng(777, 0);
  const auto zs = sample_errors(error_law{error_kind::std_normal}, rng, n);
  double mean = 0.0, var = 0.0;
  for (const double v : zs) mean += v;
  mean /= static_cast<double>(n);
  for (const double v : zs) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  CHECK(std::fabs(mean) <= 0.005);
  CHECK(var == doctest::Approx(1.0).epsilon(0.01));

  seeded_rng rng2(777, 1);
  const auto ts = sample_errors(error_law{error_kind::student_t5}, rng2, n);
  double tmean = 0.0, tvar = 0.0;
  for (const double v : ts) tmean += v;
  tmean /= static_cast<double>(n);
  for (const double v : ts) tvar += (v - tmean) * (v - tmean);
  tvar /= static_cast<double>(n);
  CHECK(std::fabs(tmean) <= 0.01);
  CHECK(tvar == doctest::Approx(5.0 / 3.0).epsilon(0.05));
}

TEST_CASE("kolmogorov-smirnov distance of covariate samples") {
  const std::size_t n = 100000;
  for (const auto& law : {u01, b22}) {
    seeded_rng rng(2024, law.kind == covariate_kind::uniform01 ? 0 : 1);
    auto xs = sample_covariates(law, rng, n);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double emp_hi = static_cast<double>(i + 1) / static_cast<double>(n);
      const double emp_lo = static_cast<double>(i) / static_cast<double>(n);
      const double f = law.cdf(xs[i]);
      ks = std::max(ks, std::max(std::fabs(emp_hi - f), std::fabs(emp_lo - f)));
    }
    CHECK(ks < 0.01);
  }
}

TEST_CASE("rng determinism and stream separation") {
  seeded_rng a(42, 0);
  seeded_rng b(42, 0);
  for (int i = 0; i < 1000; ++i) CHECK(a.uniform01() == b.uniform01());
  for (int i = 0; i < 1000; ++i) CHECK(a.normal() == b.normal());

  seeded_rng c(42, 1);
  seeded_rng d(42, 2);
  int same = 0;
  for (int i = 0; i < 1000; ++i) {
    if (c.uniform01() == d.uniform01()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("uniform01 stays inside the open checks and index sampling is in range") {
  seeded_rng rng(9, 3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const std::size_t j = rng.next_index(7);
    REQUIRE(j < 7);
    ++counts[j];
  }
  for (const int c : counts) CHECK(std::fabs(c - 10000.0) < 500.0);
  CHECK_THROWS_AS(rng.next_index(0), std::invalid_argument);
}
