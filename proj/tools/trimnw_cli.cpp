#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trimnw/asymptotics.hpp"
#include "trimnw/csv_io.hpp"
#include "trimnw/errors.hpp"
#include "trimnw/estimator.hpp"
#include "trimnw/kernels.hpp"
#include "trimnw/report.hpp"
#include "trimnw/simulation.hpp"

namespace {

using trimnw::bandwidth_rule;

struct global_options {
  std::uint64_t seed = 1;
  std::string kernel = "epanechnikov";
  std::string bandwidth = "auto";
  std::string output = "json";
  std::string out_file;
};

trimnw::kernel_spec resolve_kernel(const std::string& name) {
  if (name == "epanechnikov") return trimnw::make_kernel(trimnw::kernel_kind::epanechnikov);
  if (name == "uniform") return trimnw::make_kernel(trimnw::kernel_kind::uniform);
  if (name == "triangular") return trimnw::make_kernel(trimnw::kernel_kind::triangular);
  throw CLI::ValidationError("--kernel",
                             "expected epanechnikov|uniform|triangular, got " + name);
}

bandwidth_rule resolve_bandwidth(const std::string& text, bandwidth_rule auto_rule) {
  if (text == "auto") return auto_rule;
  char* end = nullptr;
  const double h = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !(h > 0.0)) {
    throw CLI::ValidationError("--bandwidth", "expected auto or a positive real, got " + text);
  }
  return bandwidth_rule::fixed(h);
}

std::string bandwidth_label(const bandwidth_rule& bw) {
  switch (bw.rule) {
    case bandwidth_rule::kind::fixed:
      return "fixed " + trimnw::format_real(bw.fixed_value);
    case bandwidth_rule::kind::sqrt_rate:
      return "n^-1/2 / 2";
    case bandwidth_rule::kind::rule_of_thumb:
      return "0.6 n^-1/5";
  }
  return "?";
}

trimnw::covariate_law resolve_covariate(const std::string& name) {
  if (name == "uniform") return {trimnw::covariate_kind::uniform01};
  if (name == "beta22") return {trimnw::covariate_kind::beta22};
  throw CLI::ValidationError("--covariate", "expected uniform|beta22, got " + name);
}

// "lo:hi:step" inclusive arithmetic grid, or a comma list, or one value
std::vector<double> parse_value_grid(const std::string& text) {
  std::vector<double> out;
  const auto parse_one = [](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
      throw CLI::ValidationError("grid", "cannot parse number '" + s + "'");
    }
    return v;
  };
  const auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t p = 0; p <= s.size(); ++p) {
      if (p == s.size() || s[p] == sep) {
        parts.push_back(s.substr(start, p - start));
        start = p + 1;
      }
    }
    return parts;
  };
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw CLI::ValidationError("grid", "expected lo:hi:step, got " + text);
    }
    const double lo = parse_one(parts[0]);
    const double hi = parse_one(parts[1]);
    const double step = parse_one(parts[2]);
    if (!(step > 0.0) || hi < lo) {
      throw CLI::ValidationError("grid", "need lo <= hi and step > 0 in " + text);
    }
    for (double v = lo; v <= hi + step * 1e-9; v += step) out.push_back(v);
    return out;
  }
  for (const auto& piece : split(text, ',')) out.push_back(parse_one(piece));
  return out;
}

void write_output(const global_options& g, const trimnw::run_report& report) {
  const auto format = g.output == "csv" ? trimnw::report_format::csv
                                        : trimnw::report_format::json;
  if (g.output != "csv" && g.output != "json") {
    throw CLI::ValidationError("--output", "expected json|csv, got " + g.output);
  }
  const std::string text = trimnw::emit_report(report, format);
  if (g.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out_file, std::ios::binary);
    if (!out) trimnw::raise(trimnw::errc::file_not_found, "cannot write " + g.out_file);
    out << text;
  }
}

trimnw::run_report base_report(const std::string& command, const global_options& g) {
  trimnw::run_report report;
  report.command = command;
  report.seed = g.seed;
  report.timestamp = trimnw::current_timestamp();
  return report;
}

struct dataset_flags {
  std::string input;
  std::string x_column, y_column;
  bool scale_x = false;
  std::string delimiter = ",";
  double na_sentinel = 0.0;
  bool has_sentinel = false;

  void attach(CLI::App* cmd, bool require_input = true) {
    auto* opt = cmd->add_option("--input", input, "CSV file with a header row");
    if (require_input) opt->required();
    cmd->add_option("--x-column", x_column, "covariate column (default: first)");
    cmd->add_option("--y-column", y_column, "response column (default: second)");
    cmd->add_flag("--scale-x", scale_x, "min-max scale the covariate to [0,1]");
    cmd->add_option("--delimiter", delimiter, "field delimiter (default ,)");
    cmd->add_option("--na-sentinel", na_sentinel,
                    "numeric value marking missing entries; such rows are dropped")
        ->each([this](const std::string&) { has_sentinel = true; });
  }

  trimnw::dataset_spec to_spec() const {
    trimnw::dataset_spec spec;
    spec.path = input;
    spec.x_column = x_column;
    spec.y_column = y_column;
    spec.scale_x = scale_x;
    if (delimiter.size() != 1) {
      throw CLI::ValidationError("--delimiter", "expected one character");
    }
    spec.delimiter = delimiter[0];
    if (has_sentinel) spec.na_sentinel = na_sentinel;
    return spec;
  }

  void describe(nlohmann::ordered_json& params) const {
    params["input"] = input;
    params["scale_x"] = scale_x;
    if (has_sentinel) params["na_sentinel"] = na_sentinel;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trimmed kernel regression toolkit"};
  app.require_subcommand(1);
  global_options g;
  app.add_option("--seed", g.seed, "random seed (default 1)");
  app.add_option("--kernel", g.kernel, "epanechnikov|uniform|triangular");
  app.add_option("--bandwidth", g.bandwidth, "auto or a positive real");
  app.add_option("--output", g.output, "json|csv (default json)");
  app.add_option("--out-file", g.out_file, "write the report here instead of stdout");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "trimmed estimate at query points");
  estimate->fallthrough();
  dataset_flags est_data;
  est_data.attach(estimate);
  double est_x0 = 0.5, est_alpha = 0.1;
  std::string est_grid;
  estimate->add_option("--x0", est_x0, "query point (default 0.5)");
  estimate->add_option("--alpha", est_alpha, "trimming proportion in [0, 0.5)");
  estimate->add_option("--grid", est_grid, "x_lo:x_hi:steps for a query grid");

  // ae-curve
  auto* aecmd = app.add_subcommand("ae-curve", "asymptotic efficiency across alphas");
  aecmd->fallthrough();
  std::string ae_cov = "uniform", ae_alphas = "0.05:0.45:0.05";
  double ae_x0 = 0.5;
  std::size_t ae_n = 50;
  aecmd->add_option("--covariate", ae_cov, "uniform|beta22");
  aecmd->add_option("--x0", ae_x0, "query point (default 0.5)");
  aecmd->add_option("--alphas", ae_alphas, "lo:hi:step grid (default 0.05:0.45:0.05)");
  aecmd->add_option("--approx-n", ae_n, "finite-n approximation size (default 50)");

  // mc-efficiency
  auto* mccmd = app.add_subcommand("mc-efficiency",
                                   "Monte-Carlo efficiency of the trimmed estimator");
  mccmd->fallthrough();
  int mc_example = 1;
  std::size_t mc_n = 50, mc_reps = 1000;
  double mc_x0 = 0.5;
  std::string mc_alphas = "0.05:0.45:0.05", mc_cov = "uniform";
  mccmd->add_option("--example", mc_example,
                    "model preset: 1 linear+normal, 2 cubic+normal, 3 linear+t5, 4 cubic+t5")
      ->check(CLI::Range(1, 4));
  mccmd->add_option("--n", mc_n, "sample size per replication (default 50)");
  mccmd->add_option("--reps", mc_reps, "replications (default 1000)");
  mccmd->add_option("--x0", mc_x0, "query point (default 0.5)");
  mccmd->add_option("--alphas", mc_alphas, "trim grid (default 0.05:0.45:0.05)");
  mccmd->add_option("--covariate", mc_cov, "uniform|beta22 (default uniform)");

  // bootstrap-efficiency
  auto* bscmd = app.add_subcommand("bootstrap-efficiency",
                                   "bootstrap efficiency on a CSV dataset");
  bscmd->fallthrough();
  dataset_flags bs_data;
  bs_data.attach(bscmd);
  std::size_t bs_B = 1000;
  double bs_x0 = 0.5;
  std::string bs_alphas = "0.05:0.45:0.05";
  bscmd->add_option("--resamples,-B", bs_B, "bootstrap resamples (default 1000)");
  bscmd->add_option("--x0", bs_x0, "query point (default 0.5)");
  bscmd->add_option("--alphas", bs_alphas, "trim grid (default 0.05:0.45:0.05)");

  // breakdown
  auto* bdcmd = app.add_subcommand("breakdown", "empirical breakdown-point probe");
  bdcmd->fallthrough();
  dataset_flags bd_data;
  bool bd_synthetic = false;
  std::size_t bd_n = 50;
  double bd_alpha = 0.1, bd_x0 = 0.5, bd_magnitude = 1e9, bd_threshold = 100.0;
  bd_data.attach(bdcmd, /*require_input=*/false);
  bdcmd->add_flag("--synthetic", bd_synthetic, "use a built-in linear sample");
  bdcmd->add_option("--n", bd_n, "synthetic sample size (default 50)");
  bdcmd->add_option("--alpha", bd_alpha, "trimming proportion (default 0.1)");
  bdcmd->add_option("--x0", bd_x0, "query point (default 0.5)");
  bdcmd->add_option("--magnitude", bd_magnitude, "contamination size (default 1e9)");
  bdcmd->add_option("--threshold", bd_threshold, "bias declared unbounded above this");

  try {
    app.parse(argc, argv);

    const trimnw::kernel_spec kernel = resolve_kernel(g.kernel);

    if (estimate->parsed()) {
      const bandwidth_rule bw = resolve_bandwidth(g.bandwidth, bandwidth_rule::sqrt_rate());
      const auto loaded = trimnw::load_csv(est_data.to_spec());
      std::vector<double> queries;
      if (est_grid.empty()) {
        queries.push_back(est_x0);
      } else {
        std::size_t colon1 = est_grid.find(':');
        std::size_t colon2 = est_grid.rfind(':');
        if (colon1 == std::string::npos || colon2 == colon1) {
          throw CLI::ValidationError("--grid", "expected x_lo:x_hi:steps");
        }
        const double lo = std::strtod(est_grid.substr(0, colon1).c_str(), nullptr);
        const double hi = std::strtod(est_grid.substr(colon1 + 1, colon2 - colon1 - 1).c_str(), nullptr);
        const long steps = std::strtol(est_grid.substr(colon2 + 1).c_str(), nullptr, 10);
        if (steps < 1 || hi < lo) {
          throw CLI::ValidationError("--grid", "need x_lo <= x_hi and steps >= 1");
        }
        for (long s = 0; s < steps; ++s) {
          queries.push_back(steps == 1 ? lo
                                       : lo + (hi - lo) * static_cast<double>(s) /
                                                 static_cast<double>(steps - 1));
        }
      }
      trimnw::run_report report = base_report("estimate", g);
      est_data.describe(report.parameters);
      report.parameters["x_column"] = loaded.x_column;
      report.parameters["y_column"] = loaded.y_column;
      report.parameters["dropped_rows"] = loaded.dropped_rows;
      report.parameters["n"] = loaded.sample.size();
      report.parameters["alpha"] = est_alpha;
      report.parameters["kernel"] = g.kernel;
      report.parameters["bandwidth"] = bandwidth_label(bw);
      report.parameters["h"] = bw.value_for(loaded.sample.size());
      report.columns = {"x0", "alpha", "estimate", "n_retained", "denominator_mass"};
      for (const double q : queries) {
        const auto est = trimnw::trimmed_nw(loaded.sample, q, est_alpha, kernel, bw);
        report.rows.push_back({q, est_alpha, est.value,
                               static_cast<double>(est.n_retained),
                               est.denominator_mass});
      }
      write_output(g, report);
    } else if (aecmd->parsed()) {
      const trimnw::order_stat_context ctx{resolve_covariate(ae_cov), ae_n};
      const auto curve = trimnw::ae_curve(ctx, parse_value_grid(ae_alphas), ae_x0);
      trimnw::run_report report = base_report("ae-curve", g);
      report.parameters["covariate"] = ae_cov;
      report.parameters["x0"] = ae_x0;
      report.parameters["approx_n"] = ae_n;
      report.columns = {"alpha", "ae"};
      for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        report.rows.push_back({curve.alphas[i], curve.values[i]});
      }
      write_output(g, report);
    } else if (mccmd->parsed()) {
      const bandwidth_rule bw =
          resolve_bandwidth(g.bandwidth, bandwidth_rule::rule_of_thumb());
      trimnw::regression_scenario sc;
      sc.g = (mc_example == 1 || mc_example == 3) ? trimnw::regression_model::linear5x
                                                  : trimnw::regression_model::cubic4x3;
      sc.error = {(mc_example <= 2) ? trimnw::error_kind::std_normal
                                    : trimnw::error_kind::student_t5};
      sc.covariate = resolve_covariate(mc_cov);
      sc.n = mc_n;
      sc.x0 = mc_x0;
      sc.alphas = parse_value_grid(mc_alphas);
      sc.replications = mc_reps;
      sc.kernel = kernel;
      sc.bw = bw;
      sc.seed = g.seed;
      const auto rep = trimnw::run_mc_efficiency(sc);
      trimnw::run_report report = base_report("mc-efficiency", g);
      report.parameters["example"] = mc_example;
      report.parameters["model"] =
          sc.g == trimnw::regression_model::linear5x ? "5x" : "4x^3";
      report.parameters["error"] =
          sc.error.kind == trimnw::error_kind::std_normal ? "normal" : "t5";
      report.parameters["covariate"] = mc_cov;
      report.parameters["n"] = mc_n;
      report.parameters["replications"] = mc_reps;
      report.parameters["x0"] = mc_x0;
      report.parameters["kernel"] = g.kernel;
      report.parameters["bandwidth"] = bandwidth_label(bw);
      report.parameters["h"] = rep.bandwidth;
      report.parameters["nw_variance"] = rep.nw_variance;
      report.parameters["trimmed_variances"] = rep.trimmed_variances;
      report.columns = {"alpha", "efficiency"};
      for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
        report.rows.push_back({rep.alphas[i], rep.ratios[i]});
      }
      write_output(g, report);
    } else if (bscmd->parsed()) {
      const bandwidth_rule bw = resolve_bandwidth(g.bandwidth, bandwidth_rule::sqrt_rate());
      const auto loaded = trimnw::load_csv(bs_data.to_spec());
      const auto rep = trimnw::run_bootstrap_efficiency(
          loaded.sample, bs_B, parse_value_grid(bs_alphas), bs_x0, kernel, bw, g.seed);
      trimnw::run_report report = base_report("bootstrap-efficiency", g);
      bs_data.describe(report.parameters);
      report.parameters["x_column"] = loaded.x_column;
      report.parameters["y_column"] = loaded.y_column;
      report.parameters["dropped_rows"] = loaded.dropped_rows;
      report.parameters["n"] = loaded.sample.size();
      report.parameters["resamples"] = bs_B;
      report.parameters["resamples_used"] = rep.count;
      report.parameters["resamples_dropped"] = rep.dropped;
      report.parameters["x0"] = bs_x0;
      report.parameters["kernel"] = g.kernel;
      report.parameters["bandwidth"] = bandwidth_label(bw);
      report.parameters["h"] = rep.bandwidth;
      report.parameters["nw_variance"] = rep.nw_variance;
      report.parameters["trimmed_variances"] = rep.trimmed_variances;
      report.columns = {"alpha", "efficiency"};
      for (std::size_t i = 0; i < rep.alphas.size(); ++i) {
        report.rows.push_back({rep.alphas[i], rep.ratios[i]});
      }
      write_output(g, report);
    } else if (bdcmd->parsed()) {
      const bandwidth_rule bw = resolve_bandwidth(g.bandwidth, bandwidth_rule::sqrt_rate());
      trimnw::paired_sample sample;
      trimnw::run_report report = base_report("breakdown", g);
      if (bd_synthetic) {
        trimnw::seeded_rng rng(g.seed, 0);
        sample.xs.resize(bd_n);
        sample.ys.resize(bd_n);
        for (std::size_t i = 0; i < bd_n; ++i) {
          sample.xs[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(bd_n);
          sample.ys[i] = 5.0 * sample.xs[i] + 0.5 * rng.normal();
        }
        report.parameters["input"] = "synthetic linear grid";
        report.parameters["n"] = bd_n;
      } else {
        if (bd_data.input.empty()) {
          throw CLI::ValidationError("breakdown", "need --input or --synthetic");
        }
        const auto loaded = trimnw::load_csv(bd_data.to_spec());
        sample = loaded.sample;
        bd_data.describe(report.parameters);
        report.parameters["x_column"] = loaded.x_column;
        report.parameters["y_column"] = loaded.y_column;
        report.parameters["n"] = sample.size();
      }
      const auto result = trimnw::empirical_breakdown_point(
          sample, bd_x0, bd_alpha, kernel, bw, bd_threshold, bd_magnitude);
      report.parameters["alpha"] = bd_alpha;
      report.parameters["x0"] = bd_x0;
      report.parameters["magnitude"] = bd_magnitude;
      report.parameters["threshold"] = bd_threshold;
      report.parameters["kernel"] = g.kernel;
      report.parameters["bandwidth"] = bandwidth_label(bw);
      report.parameters["m_star"] = result.m_star;
      report.parameters["ratio"] =
          std::to_string(result.m_star) + "/" + std::to_string(result.n);
      report.parameters["ratio_value"] =
          static_cast<double>(result.m_star) / static_cast<double>(result.n);
      report.columns = {"m", "bias"};
      for (std::size_t m = 0; m < result.bias_curve.size(); ++m) {
        report.rows.push_back({static_cast<double>(m), result.bias_curve[m]});
      }
      write_output(g, report);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const trimnw::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
