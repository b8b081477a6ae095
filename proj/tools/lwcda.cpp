// Experiment harness for the clustered compressed-data-aggregation
// simulator: seeded end-to-end runs and CSV emission for the RIC,
// coherence, phase-transition, reconstruction and transmission-cost
// studies.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lwcda/experiments.hpp"
#include "lwcda/io.hpp"

namespace {

using lwcda::ExperimentConfig;

struct CliOptions {
  std::string config_path;
};

void add_common_options(CLI::App* cmd, ExperimentConfig& config) {
  cmd->add_option("--seed", config.seed, "Root seed; all randomness derives from it");
  cmd->add_option("--trials", config.trials,
                  "Trials / repetitions (0 = command default)");
  cmd->add_option("--out", config.out_dir, "Output directory");
  cmd->add_option("--n", config.n, "Node count");

  auto* width = cmd->add_option("--area-width", config.area.width, "Area width (m)");
  auto* height =
      cmd->add_option("--area-height", config.area.height, "Area height (m)");
  cmd->add_option_function<double>(
         "--area",
         [&config](const double side) {
           config.area.width = side;
           config.area.height = side;
         },
         "Square area side (m)")
      ->excludes(width)
      ->excludes(height);

  cmd->add_option_function<std::string>(
      "--deployment",
      [&config](const std::string& value) {
        if (value == "grid") {
          config.deployment = lwcda::DeploymentSpec::Kind::Grid;
        } else if (value == "random") {
          config.deployment = lwcda::DeploymentSpec::Kind::Random;
        } else {
          throw CLI::ValidationError("--deployment must be grid or random");
        }
      },
      "Deployment kind: grid | random");

  cmd->add_option_function<std::string>(
      "--basis",
      [&config](const std::string& value) {
        const auto kind = lwcda::basis_kind_from_string(value);
        if (!kind)
          throw CLI::ValidationError("--basis must be dct, dft, dwt or laplacian");
        config.basis = *kind;
      },
      "Sparsifying basis: dct | dft | dwt | laplacian");

  cmd->add_flag("--slnm", config.slnm,
                "Relabel random deployments along the nearest-neighbor chain");

  auto* gamma = cmd->add_option_function<double>(
      "--gamma", [&config](double g) { config.gamma_pct = g; },
      "Compression rate in percent (expected M = N * (1 - gamma/100))");
  cmd->add_option_function<double>(
         "--thr", [&config](double t) { config.t_hr = t; },
         "CH election threshold in (0, 1]")
      ->excludes(gamma);

  cmd->add_option("--e-th", config.e_th, "Recovery success threshold");
  cmd->add_option("--omp-k", config.omp_max_atoms,
                  "OMP atom cap (0 = floor(M/4))");

  cmd->add_option_function<double>(
      "--sink-x",
      [&config](double x) {
        if (!config.sink) config.sink = lwcda::Point2{};
        config.sink->x = x;
      },
      "Sink x coordinate (default: area center)");
  cmd->add_option_function<double>(
      "--sink-y",
      [&config](double y) {
        if (!config.sink) config.sink = lwcda::Point2{};
        config.sink->y = y;
      },
      "Sink y coordinate (default: area center)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered compressed-data-aggregation simulator"};
  app.require_subcommand(1);

  // --config is applied before flag parsing so flags override file values.
  ExperimentConfig config;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        config = lwcda::load_config(argv[i + 1]);
      } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
      }
    }
  }
  std::string config_path;
  app.add_option("--config", config_path,
                 "Config file (sectioned key = value); flags override it");

  auto* aggregate = app.add_subcommand(
      "aggregate", "One full aggregation cycle: topology, clusters, Phi, "
                   "measurements, recovery, costs");
  auto* ric = app.add_subcommand(
      "ric", "Monte-Carlo restricted-isometry sweep (CSV per compression rate)");
  auto* coherence =
      app.add_subcommand("coherence", "Mutual coherence sweep over M");
  auto* phase = app.add_subcommand(
      "phase", "Empirical phase diagram over (k/M, 1 - M/N)");
  auto* cost =
      app.add_subcommand("cost-sweep", "Transmission cost versus compression rate");
  auto* density = app.add_subcommand(
      "density-sweep", "Transmission cost versus node density at fixed gamma");
  auto* sink = app.add_subcommand(
      "sink-sweep", "Transmission cost versus sink location on the area diagonal");
  auto* field = app.add_subcommand("field", "Dump the synthetic field raster");

  for (CLI::App* cmd :
       {aggregate, ric, coherence, phase, cost, density, sink, field}) {
    add_common_options(cmd, config);
  }
  std::vector<double> ric_gammas;
  ric->add_option("--gammas", ric_gammas, "Compression rates for the RIC sweep");
  int sink_positions = 0;
  sink->add_option("--positions", sink_positions,
                   "Number of sink positions on the diagonal");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!ric_gammas.empty()) config.ric_gammas = ric_gammas;
    if (sink_positions > 0) config.sink_positions = sink_positions;
    config.validate();

    if (aggregate->parsed()) {
      const auto summary = lwcda::run_aggregate(config);
      std::cout << "n=" << summary.n << " m=" << summary.m
                << " gamma=" << summary.gamma_pct
                << " recon_error=" << summary.recon_error
                << " numerical_sparsity=" << summary.numerical_sparsity << '\n';
      for (const auto& file : summary.files) std::cout << file.string() << '\n';
    } else if (ric->parsed()) {
      std::cout << lwcda::run_ric(config).string() << '\n';
    } else if (coherence->parsed()) {
      std::cout << lwcda::run_coherence(config).string() << '\n';
    } else if (phase->parsed()) {
      std::cout << lwcda::run_phase(config).string() << '\n';
    } else if (cost->parsed()) {
      std::cout << lwcda::run_cost_sweep(config).string() << '\n';
    } else if (density->parsed()) {
      std::cout << lwcda::run_density_sweep(config).string() << '\n';
    } else if (sink->parsed()) {
      std::cout << lwcda::run_sink_sweep(config).string() << '\n';
    } else if (field->parsed()) {
      std::cout << lwcda::run_field(config).string() << '\n';
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
