#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lwcda/bases.hpp"
#include "lwcda/cost_model.hpp"
#include "lwcda/cs_analysis.hpp"
#include "lwcda/field_gen.hpp"
#include "lwcda/measurement.hpp"
#include "lwcda/net_topology.hpp"

namespace lwcda {

/// One configuration drives every study; commands ignore the knobs they do
/// not use. The compression rate gamma% and the CH threshold t_hr are two
/// views of the same quantity (expected M = N * t_hr, gamma = (1 - M/N) *
/// 100), so at most one of them may be set explicitly.
struct ExperimentConfig {
  DeploymentSpec::Kind deployment = DeploymentSpec::Kind::Grid;
  int n = 100;
  Rect area{100.0, 100.0};
  std::optional<Point2> sink;

  std::optional<double> gamma_pct;
  std::optional<double> t_hr;

  BasisKind basis = BasisKind::Dct;
  bool slnm = false;

  std::uint64_t seed = 1;
  int trials = 0;  // 0 = per-command default
  double e_th = 1e-8;
  int omp_max_atoms = 0;  // 0 = floor(M/4)
  std::string out_dir = "out";

  std::vector<double> ric_gammas{90.0, 70.0, 30.0, 10.0};
  std::vector<int> m_values;          // coherence / phase M axis; default 100:100:900
  std::vector<double> phase_rho;      // default 0.1:0.1:0.9
  std::vector<double> cost_gammas;    // default 10:10:90
  std::vector<int> density_values;    // default 100:100:900
  int sink_positions = 5;

  double resolved_t_hr() const;
  double resolved_gamma_pct() const;
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Sectioned key-value config file (# comments, `key = value` lines).
std::string config_to_text(const ExperimentConfig& config);
ExperimentConfig config_from_text(const std::string& text,
                                  const std::string& origin = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Deployment plus optional SLNM relabeling (random deployments only).
NetworkTopology build_topology(const ExperimentConfig& config);

/// Measurement matrix with exactly m rows: uniform m-subset CH election,
/// leaf assignment, per-node signs. The analysis studies prescribe exact
/// measurement counts.
SparseMeasurementMatrix generate_phi_exact(const NetworkTopology& topo, int m,
                                           std::uint64_t seed);

struct AggregateSummary {
  int n = 0;
  int m = 0;
  double t_hr = 0.0;
  double gamma_pct = 0.0;
  double recon_error = 0.0;
  double numerical_sparsity = 0.0;
  int omp_iterations = 0;
  double lwcda_steady_cost = 0.0;
  double lwcda_bootstrap_cost = 0.0;
  double noncs_total_cost = 0.0;
  std::vector<std::filesystem::path> files;
};

/// End-to-end aggregation cycle: deploy (+ SLNM), elect CHs at t_hr, build
/// Phi, measure a synthetic field, recover, account costs; writes topology,
/// assignment, Phi, Y, recovery, traffic and cost files under out_dir.
AggregateSummary run_aggregate(const ExperimentConfig& config);

struct RicRow {
  double gamma_pct;
  int k;
  double delta_k;
  double lambda_min;
  double lambda_max;
};
std::vector<RicRow> compute_ric_sweep(const ExperimentConfig& config);
std::filesystem::path run_ric(const ExperimentConfig& config);

struct CoherenceRow {
  int m;
  double gamma_pct;
  double mu_mean;
  int trials;
};
std::vector<CoherenceRow> compute_coherence_sweep(const ExperimentConfig& config);
std::filesystem::path run_coherence(const ExperimentConfig& config);

PhaseDiagram compute_phase(const ExperimentConfig& config);
std::filesystem::path run_phase(const ExperimentConfig& config);

struct CostRow {
  std::string scheme;
  double gamma_pct;
  std::uint64_t run;  // sweep repetition index
  int n;
  Point2 sink;
  double cost;
};
std::vector<CostRow> compute_cost_sweep(const ExperimentConfig& config);
std::filesystem::path run_cost_sweep(const ExperimentConfig& config);

std::vector<CostRow> compute_density_sweep(const ExperimentConfig& config);
std::filesystem::path run_density_sweep(const ExperimentConfig& config);

std::vector<CostRow> compute_sink_sweep(const ExperimentConfig& config);
std::filesystem::path run_sink_sweep(const ExperimentConfig& config);

std::filesystem::path run_field(const ExperimentConfig& config);

}  // namespace lwcda
