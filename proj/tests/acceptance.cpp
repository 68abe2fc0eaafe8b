// acceptance harness: prints one [PASS]/[FAIL]/[SKIP]/[NOTE] line per criterion
// and exits nonzero if any criterion fails
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trimnw/asymptotics.hpp"
#include "trimnw/csv_io.hpp"
#include "trimnw/errors.hpp"
#include "trimnw/estimator.hpp"
#include "trimnw/kernels.hpp"
#include "trimnw/report.hpp"
#include "trimnw/rng.hpp"
#include "trimnw/simulation.hpp"

using namespace trimnw;

namespace {

constexpr std::uint64_t k_table_seed = 21;

int g_failures = 0;

void line(int idx, const char* status, const std::string& msg) {
  std::cout << "[" << status << "] criterion " << idx << ": " << msg << "\n";
  if (std::string(status) == "FAIL") ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 7) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

const kernel_spec k_epan = make_kernel(kernel_kind::epanechnikov);

// ---- criterion 1: closed form vs golden-section search -------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  seeded_rng rng(2718, 0);
  const double alphas[] = {0.0, 0.05, 0.1, 0.2, 0.3};
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    const std::size_t n = 20 + rng.next_index(41);
    paired_sample s;
    s.xs.resize(n);
    s.ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.xs[i] = rng.uniform01();
      s.ys[i] = 5.0 * s.xs[i] + rng.normal();
    }
    const double x0 = 0.25 + 0.5 * rng.uniform01();
    const double alpha = alphas[rng.next_index(5)];
    const auto bw = bandwidth_rule::fixed(0.15 + 0.35 * rng.uniform01());
    try {
      const double closed = trimmed_nw(s, x0, alpha, k_epan, bw).value;
      const double searched = argmin_oracle(s, x0, alpha, k_epan, bw);
      worst = std::max(worst, std::fabs(closed - searched));
      ++done;
    } catch (const error&) {
      // empty window: draw a fresh configuration
    }
  }
  const double sec = seconds_since(t0);
  if (worst <= 1e-8 && sec < 5.0) {
    line(1, "PASS", "closed form vs least-squares search over 200 configurations, "
                    "max |diff| = " + fmt(worst, 3) + " (" + fmt(sec, 2) + " s)");
  } else {
    line(1, "FAIL", "max |diff| = " + fmt(worst, 3) + ", elapsed " + fmt(sec, 2) + " s");
  }
}

// ---- criterion 2: alpha = 0 equals the untrimmed estimator ---------------

void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  seeded_rng rng(3141, 0);
  int exact = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 25 + rng.next_index(26);
    paired_sample s;
    s.xs.resize(n);
    s.ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      s.xs[i] = rng.uniform01();
      s.ys[i] = 4.0 * s.xs[i] * s.xs[i] * s.xs[i] + rng.normal();
    }
    const double x0 = 0.3 + 0.4 * rng.uniform01();
    const auto bw = bandwidth_rule::fixed(0.2 + 0.3 * rng.uniform01());
    const auto a = trimmed_nw(s, x0, 0.0, k_epan, bw);
    const auto b = nw(s, x0, k_epan, bw);
    if (a.value == b.value && a.denominator_mass == b.denominator_mass) ++exact;
  }
  const double sec = seconds_since(t0);
  if (exact == 100 && sec < 1.0) {
    line(2, "PASS", "alpha = 0 equals the untrimmed estimator bit for bit on "
                    "100/100 samples (" + fmt(sec, 2) + " s)");
  } else {
    line(2, "FAIL", "bit-identical on " + std::to_string(exact) + "/100 samples");
  }
}

// ---- criterion 3: order-statistic densities average to the parent --------

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto kind : {covariate_kind::uniform01, covariate_kind::beta22}) {
    for (const std::size_t n : {1u, 5u, 10u, 25u, 50u}) {
      for (const double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        worst = std::max(worst,
                         mixture_identity_residual({covariate_law{kind}, n}, x));
      }
    }
  }
  const double sec = seconds_since(t0);
  if (worst <= 1e-10 && sec < 1.0) {
    line(3, "PASS", "order-statistic mixture identity, max residual = " +
                        fmt(worst, 3) + " (" + fmt(sec, 2) + " s)");
  } else {
    line(3, "FAIL", "max residual = " + fmt(worst, 3));
  }
}

// ---- criterion 4: efficiency never exceeds one ----------------------------

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto kind : {covariate_kind::uniform01, covariate_kind::beta22}) {
    for (const std::size_t n : {50u, 200u, 1000u}) {
      const order_stat_context ctx{covariate_law{kind}, n};
      for (int ai = 0; ai < 20; ++ai) {
        const double alpha = 0.45 * ai / 19.0;
        for (int xi = 0; xi < 20; ++xi) {
          const double x = 0.05 + 0.9 * xi / 19.0;
          worst = std::max(worst, asymptotic_efficiency(ctx, alpha, x));
        }
      }
    }
  }
  const double sec = seconds_since(t0);
  if (worst <= 1.0 + 1e-9 && sec < 5.0) {
    line(4, "PASS", "efficiency <= 1 on a 20x20 grid, both laws, n in {50,200,1000}; "
                    "max = " + fmt(worst, 10) + " (" + fmt(sec, 2) + " s)");
  } else {
    line(4, "FAIL", "max efficiency = " + fmt(worst, 12) + ", elapsed " +
                        fmt(sec, 2) + " s");
  }
}

// ---- criterion 5: efficiency anchor cell plus curve shape -----------------

void criterion_5() {
  const order_stat_context u50{covariate_law{covariate_kind::uniform01}, 50};
  const double anchor = asymptotic_efficiency(u50, 0.05, 0.5);
  bool ok = std::fabs(anchor - 45.0 / 46.0) <= 1e-6;
  std::string detail = "anchor AE(0.05) = " + fmt(anchor, 8) + " vs 45/46";

  // qualitative shape at the median query: near one through alpha = 0.30,
  // then a monotone decline toward alpha = 0.45
  const std::vector<double> grid{0.05, 0.10, 0.15, 0.20, 0.25, 0.30,
                                 0.35, 0.40, 0.45};
  const auto curve = ae_curve(u50, grid, 0.5);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0.30 && curve.values[i] < 0.9) ok = false;
  }
  const double v35 = curve.values[6], v40 = curve.values[7], v45 = curve.values[8];
  if (!(v35 > v40 && v40 > v45 && v45 < 0.9)) ok = false;

  // the beta(2,2) median cell agrees with the same decline
  const double b45 =
      asymptotic_efficiency({covariate_law{covariate_kind::beta22}, 50}, 0.45, 0.5);
  if (std::fabs(b45 - 0.5005812) > 0.05) ok = false;

  detail += ", tail AE(0.45) = " + fmt(v45, 7);
  line(5, ok ? "PASS" : "FAIL", detail);
}

// ---- criterion 6: Monte-Carlo efficiency table ----------------------------

struct table_block {
  int example;
  std::size_t n;
  double ref[6];
};

const double k_alpha_grid[6] = {0.05, 0.10, 0.20, 0.30, 0.40, 0.45};

const table_block k_reference[] = {
    {1, 50, {1.0274176, 0.9659629, 1.0141424, 0.6229415, 0.2438898, 0.1900028}},
    {1, 500, {1.0822063, 1.0020056, 1.0444929, 1.0289262, 0.4826861, 0.2658498}},
    {2, 50, {1.0484987, 0.9574283, 0.9581104, 0.7012951, 0.3207287, 0.2309493}},
    {2, 500, {0.9379374, 0.9479973, 1.0495048, 1.0015816, 0.5939786, 0.3355768}},
    {3, 50, {1.0300403, 1.0345411, 0.8658538, 0.6145255, 0.2826788, 0.2157184}},
    {3, 500, {1.0728524, 0.9986963, 1.1596102, 1.0221897, 0.4859994, 0.2524595}},
    {4, 50, {0.9551044, 0.9540824, 0.9748282, 0.7162221, 0.3683285, 0.2436081}},
    {4, 500, {1.0058514, 1.0806839, 1.0892772, 1.0036713, 0.5958239, 0.3385112}},
};

regression_scenario example_scenario(int example, std::size_t n) {
  regression_scenario sc;
  sc.g = (example == 1 || example == 3) ? regression_model::linear5x
                                        : regression_model::cubic4x3;
  sc.error = {example <= 2 ? error_kind::std_normal : error_kind::student_t5};
  sc.covariate = {covariate_kind::uniform01};
  sc.n = n;
  sc.x0 = 0.5;
  sc.alphas.assign(k_alpha_grid, k_alpha_grid + 6);
  sc.replications = 1000;
  sc.kernel = k_epan;
  sc.bw = bandwidth_rule::rule_of_thumb();
  sc.seed = k_table_seed;
  return sc;
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  double worst_excess = -1e300;
  std::string worst_cell;
  for (const auto& block : k_reference) {
    const auto rep = run_mc_efficiency(example_scenario(block.example, block.n));
    for (int a = 0; a < 6; ++a) {
      const double tol = std::max(0.08, 0.15 * block.ref[a]);
      const double excess = std::fabs(rep.ratios[a] - block.ref[a]) - tol;
      if (excess > worst_excess) {
        worst_excess = excess;
        worst_cell = "example " + std::to_string(block.example) + ", n = " +
                     std::to_string(block.n) + ", alpha = " + fmt(k_alpha_grid[a], 2) +
                     ": " + fmt(rep.ratios[a], 7) + " vs " + fmt(block.ref[a], 7);
      }
      if (excess > 0.0) ++bad;
    }
  }
  const double sec = seconds_since(t0);
  if (bad == 0 && sec < 600.0) {
    line(6, "PASS", "48/48 efficiency cells within max(0.08, 15%) at seed " +
                        std::to_string(k_table_seed) +
                        ", h = 0.6 n^{-1/5}; tightest margin at " + worst_cell +
                        " (" + fmt(sec, 1) + " s)");
  } else {
    line(6, "FAIL", std::to_string(bad) + "/48 cells out of tolerance; worst: " +
                        worst_cell + " (" + fmt(sec, 1) + " s)");
  }

  // behavior under the h = n^{-1/2}/2 rate at the two pinned cells: the window
  // shrinks too fast for these designs, so the table is not recoverable there
  try {
    auto sc = example_scenario(1, 500);
    sc.bw = bandwidth_rule::sqrt_rate();
    const auto rep = run_mc_efficiency(sc);
    line(6, "NOTE", "with h = n^{-1/2}/2, example 1, n = 500 gives alpha-0.45 "
                    "efficiency " + fmt(rep.ratios[5], 7) +
                    " (trimming never reaches the narrow window; reference 0.2658498)");
  } catch (const error& e) {
    line(6, "NOTE", std::string("with h = n^{-1/2}/2, example 1, n = 500 aborts: ") +
                        e.what());
  }
  try {
    auto sc = example_scenario(2, 50);
    sc.bw = bandwidth_rule::sqrt_rate();
    const auto rep = run_mc_efficiency(sc);
    line(6, "NOTE", "with h = n^{-1/2}/2, example 2, n = 50 gives alpha-0.40 "
                    "efficiency " + fmt(rep.ratios[4], 7) + " (reference 0.3207287)");
  } catch (const error& e) {
    line(6, "NOTE", std::string("with h = n^{-1/2}/2, example 2, n = 50 aborts: ") +
                        e.what());
  }
}

// ---- criterion 7: breakdown step function ---------------------------------

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  struct probe {
    std::size_t n;
    double alpha;
  };
  const probe probes[] = {{50, 0.1}, {50, 0.3}, {200, 0.45}};
  const auto bw = bandwidth_rule::sqrt_rate();
  bool ok = true;
  std::string detail;
  for (const auto& p : probes) {
    paired_sample s;
    s.xs.resize(p.n);
    s.ys.resize(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      s.xs[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(p.n);
      s.ys[i] = 5.0 * s.xs[i];
    }
    const std::size_t k = trim_count(p.n, p.alpha);
    const double at_k = breakdown_bias(s, {k, 1e9}, 0.5, p.alpha, k_epan, bw);
    const double past_k = breakdown_bias(s, {k + 1, 1e9}, 0.5, p.alpha, k_epan, bw);
    const auto result = empirical_breakdown_point(s, 0.5, p.alpha, k_epan, bw, 1e2);
    const bool cell_ok =
        at_k == 0.0 && past_k > 1e2 && result.m_star == k + 1 && result.n == p.n;
    if (!cell_ok) ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "(n = " + std::to_string(p.n) + ", alpha = " + fmt(p.alpha, 3) +
              ") -> m*/n = " + std::to_string(result.m_star) + "/" +
              std::to_string(result.n);
  }
  const double sec = seconds_since(t0);
  if (ok && sec < 10.0) {
    line(7, "PASS", "zero bias through floor(n alpha), breakdown at the next point: " +
                        detail + " (" + fmt(sec, 2) + " s)");
  } else {
    line(7, "FAIL", detail);
  }
}

// ---- criterion 8: CLT-scale sanity of the standardized estimator ----------

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = 500, reps = 2000;
  const double alpha = 0.05, x0 = 0.5;
  const auto bw = bandwidth_rule::rule_of_thumb();
  const double h = bw.value_for(n);
  const covariate_law law{covariate_kind::uniform01};
  const error_law noise{error_kind::std_normal};
  const double g_x0 = model_value(regression_model::linear5x, x0);
  const double bias =
      asymptotic_bias_term(x0, n, alpha, k_epan, bw, 5.0, 0.0, law).value;

  std::vector<double> standardized(reps);
  for (std::size_t j = 0; j < reps; ++j) {
    seeded_rng rng(k_table_seed, j + 1);
    paired_sample s;
    s.xs = sample_covariates(law, rng, n);
    s.ys = sample_errors(noise, rng, n);
    for (std::size_t i = 0; i < n; ++i) s.ys[i] += 5.0 * s.xs[i];
    const double est = trimmed_nw(order_pairs(s), x0, alpha, k_epan, h).value;
    standardized[j] = std::sqrt(static_cast<double>(n) * h) * (est - g_x0 - bias);
  }

  double mean = 0.0;
  for (const double v : standardized) mean += v;
  mean /= static_cast<double>(reps);
  const double var = population_variance(standardized);
  const double z = mean / std::sqrt(var / static_cast<double>(reps));
  const double v_ref = asymptotic_variance(x0, alpha, noise.variance(), k_epan, law, n);
  const double rel = std::fabs(var - v_ref) / v_ref;

  const double sec = seconds_since(t0);
  const std::string detail = "mean z = " + fmt(z, 3) + " (|z| <= 3), variance " +
                             fmt(var, 5) + " vs " + fmt(v_ref, 5) + " (" +
                             fmt(100.0 * rel, 3) + "% off, 25% allowed; " +
                             fmt(sec, 1) + " s)";
  if (std::fabs(z) <= 3.0 && rel <= 0.25 && sec < 300.0) {
    line(8, "PASS", detail);
  } else {
    line(8, "FAIL", detail);
  }
}

// ---- criterion 9: real-data bootstrap cells (conditional) -----------------

std::string dataset_dir() {
  if (const char* env = std::getenv("TRIMNW_DATA_DIR")) return env;
  return std::string(TRIMNW_SOURCE_DIR) + "/data/uci";
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string dir = dataset_dir();
  const std::string parkinsons = dir + "/parkinsons_updrs.csv";
  const std::string air = dir + "/air_quality.csv";
  if (!std::filesystem::exists(parkinsons) || !std::filesystem::exists(air)) {
    line(9, "SKIP", "place parkinsons_updrs.csv and air_quality.csv under " + dir +
                        " (or set TRIMNW_DATA_DIR) to run the real-data cells");
    return;
  }
  try {
    dataset_spec pk;
    pk.path = parkinsons;
    pk.x_column = "NHR";
    pk.y_column = "RPDE";
    const auto pk_data = load_csv(pk);
    const auto pk_rep =
        run_bootstrap_efficiency(pk_data.sample, 1000, {0.05, 0.45}, 0.5, k_epan,
                                 bandwidth_rule::sqrt_rate(), k_table_seed);

    dataset_spec aq;
    aq.path = air;
    aq.x_column = "PT08.S3(NOx)";
    aq.y_column = "AH";
    aq.scale_x = true;
    aq.na_sentinel = -200.0;
    const auto aq_data = load_csv(aq);
    const auto aq_rep =
        run_bootstrap_efficiency(aq_data.sample, 1000, {0.45}, 0.5, k_epan,
                                 bandwidth_rule::sqrt_rate(), k_table_seed);

    const bool ok = std::fabs(pk_rep.ratios[0] - 0.9310) <= 0.25 &&
                    std::fabs(pk_rep.ratios[1] - 0.1750) <= 0.10 &&
                    aq_rep.ratios[0] <= 0.05;
    const double sec = seconds_since(t0);
    line(9, ok ? "PASS" : "FAIL",
         "voice data alpha 0.05 -> " + fmt(pk_rep.ratios[0], 4) + " (0.9310 +/- 0.25), "
         "alpha 0.45 -> " + fmt(pk_rep.ratios[1], 4) + " (0.1750 +/- 0.10); "
         "air data alpha 0.45 -> " + fmt(aq_rep.ratios[0], 4) + " (<= 0.05) (" +
         fmt(sec, 1) + " s)");
  } catch (const error& e) {
    line(9, "SKIP", std::string("datasets present but not loadable as documented: ") +
                        e.what());
  }
}

// ---- criterion 10: byte-identical reports on a re-run ----------------------

run_report mc_report() {
  auto sc = example_scenario(1, 50);
  sc.replications = 300;
  const auto rep = run_mc_efficiency(sc);
  run_report out;
  out.command = "mc-efficiency";
  out.parameters["n"] = rep.n;
  out.parameters["h"] = rep.bandwidth;
  out.parameters["nw_variance"] = rep.nw_variance;
  out.seed = rep.seed;
  out.timestamp = current_timestamp();
  out.columns = {"alpha", "efficiency"};
  for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
    out.rows.push_back({rep.alphas[i], rep.ratios[i]});
  }
  return out;
}

void criterion_10() {
  const std::string a = emit_report(mc_report(), report_format::json);
  const std::string b = emit_report(mc_report(), report_format::json);

  const order_stat_context ctx{covariate_law{covariate_kind::beta22}, 50};
  const auto c1 = ae_curve(ctx, {0.05, 0.25, 0.45}, 0.5);
  const auto c2 = ae_curve(ctx, {0.05, 0.25, 0.45}, 0.5);
  bool curves_equal = true;
  for (std::size_t i = 0; i < c1.values.size(); ++i) {
    if (c1.values[i] != c2.values[i]) curves_equal = false;
  }

  if (a == b && curves_equal) {
    line(10, "PASS", "re-running the pipeline with the same seed reproduces the JSON "
                     "report byte for byte (" + std::to_string(a.size()) + " bytes)");
  } else {
    line(10, "FAIL", "re-run produced a different report");
  }
}

}  // namespace

int main() {
  std::cout << "acceptance checks (seed " << k_table_seed << ")\n";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::cout << "all criteria passed (skips noted above, if any)\n";
    return 0;
  }
  std::cout << g_failures << " criterion(s) failed\n";
  return 1;
}
