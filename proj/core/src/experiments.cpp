#include "lwcda/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lwcda/io.hpp"
#include "lwcda/parallel.hpp"
#include "lwcda/recovery.hpp"
#include "lwcda/rng.hpp"

namespace lwcda {

namespace fs = std::filesystem;

double ExperimentConfig::resolved_t_hr() const {
  if (t_hr) return *t_hr;
  if (gamma_pct) return 1.0 - *gamma_pct / 100.0;
  return 0.5;  // gamma = 50%
}

double ExperimentConfig::resolved_gamma_pct() const {
  return (1.0 - resolved_t_hr()) * 100.0;
}

void ExperimentConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config: n must be positive");
  if (area.width <= 0 || area.height <= 0)
    throw std::invalid_argument("config: area sides must be positive");
  if (gamma_pct && t_hr)
    throw std::invalid_argument("config: gamma and thr are mutually exclusive");
  if (gamma_pct && !(*gamma_pct >= 0.0 && *gamma_pct < 100.0))
    throw std::invalid_argument("config: gamma must lie in [0, 100)");
  if (t_hr && !(*t_hr > 0.0 && *t_hr <= 1.0))
    throw std::invalid_argument("config: thr must lie in (0, 1]");
  if (e_th <= 0.0) throw std::invalid_argument("config: e_th must be positive");
  if (trials < 0) throw std::invalid_argument("config: trials must be non-negative");
  if (omp_max_atoms < 0)
    throw std::invalid_argument("config: omp_max_atoms must be non-negative");
  if (sink_positions < 1)
    throw std::invalid_argument("config: sink_positions must be positive");
  if (sink && (sink->x < 0 || sink->x > area.width || sink->y < 0 ||
               sink->y > area.height))
    throw std::invalid_argument("config: sink position outside the area");
}

namespace {

std::string deployment_name(DeploymentSpec::Kind kind) {
  return kind == DeploymentSpec::Kind::Grid ? "grid" : "random";
}

template <typename T>
std::string join_list(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_same_v<T, double>) {
      out << fmt_double(values[i]);
    } else {
      out << values[i];
    }
  }
  return out.str();
}

std::vector<int> default_m_axis() {
  std::vector<int> values;
  for (int m = 100; m <= 900; m += 100) values.push_back(m);
  return values;
}

std::vector<double> default_rho_axis() {
  std::vector<double> values;
  for (int i = 1; i <= 9; ++i) values.push_back(0.1 * i);
  return values;
}

std::vector<double> default_cost_gammas() {
  std::vector<double> values;
  for (int g = 10; g <= 90; g += 10) values.push_back(static_cast<double>(g));
  return values;
}

}  // namespace

std::string config_to_text(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "[network]\n";
  out << "deployment = " << deployment_name(config.deployment) << '\n';
  out << "n = " << config.n << '\n';
  out << "area_width = " << fmt_double(config.area.width) << '\n';
  out << "area_height = " << fmt_double(config.area.height) << '\n';
  if (config.sink) {
    out << "sink_x = " << fmt_double(config.sink->x) << '\n';
    out << "sink_y = " << fmt_double(config.sink->y) << '\n';
  }
  out << "\n[cs]\n";
  if (config.gamma_pct) out << "gamma = " << fmt_double(*config.gamma_pct) << '\n';
  if (config.t_hr) out << "thr = " << fmt_double(*config.t_hr) << '\n';
  out << "basis = " << to_string(config.basis) << '\n';
  out << "slnm = " << (config.slnm ? 1 : 0) << '\n';
  out << "e_th = " << fmt_double(config.e_th) << '\n';
  out << "omp_max_atoms = " << config.omp_max_atoms << '\n';
  out << "\n[run]\n";
  out << "seed = " << config.seed << '\n';
  out << "trials = " << config.trials << '\n';
  out << "out_dir = " << config.out_dir << '\n';
  out << "\n[sweep]\n";
  out << "ric_gammas = " << join_list(config.ric_gammas) << '\n';
  if (!config.m_values.empty()) out << "m_values = " << join_list(config.m_values) << '\n';
  if (!config.phase_rho.empty()) out << "phase_rho = " << join_list(config.phase_rho) << '\n';
  if (!config.cost_gammas.empty())
    out << "cost_gammas = " << join_list(config.cost_gammas) << '\n';
  if (!config.density_values.empty())
    out << "density_values = " << join_list(config.density_values) << '\n';
  out << "sink_positions = " << config.sink_positions << '\n';
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(const std::string& origin, int line,
                               const std::string& message) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + message);
}

double parse_double(const std::string& origin, int line, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(origin, line, "expected a number, got '" + value + "'");
  }
}

long long parse_int(const std::string& origin, int line, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    config_error(origin, line, "expected an integer, got '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> parts;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) parts.push_back(t);
  }
  return parts;
}

}  // namespace

ExperimentConfig config_from_text(const std::string& text,
                                  const std::string& origin) {
  ExperimentConfig config;
  config.ric_gammas.clear();  // replaced only when the file sets the key
  bool ric_set = false;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') config_error(origin, line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "network" && section != "cs" && section != "run" &&
          section != "sweep")
        config_error(origin, line, "unknown section '" + section + "'");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      config_error(origin, line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    const std::string path = section.empty() ? key : section + "." + key;

    if (path == "network.deployment") {
      if (value == "grid") {
        config.deployment = DeploymentSpec::Kind::Grid;
      } else if (value == "random") {
        config.deployment = DeploymentSpec::Kind::Random;
      } else {
        config_error(origin, line, "deployment must be grid or random");
      }
    } else if (path == "network.n") {
      config.n = static_cast<int>(parse_int(origin, line, value));
    } else if (path == "network.area_width") {
      config.area.width = parse_double(origin, line, value);
    } else if (path == "network.area_height") {
      config.area.height = parse_double(origin, line, value);
    } else if (path == "network.sink_x") {
      if (!config.sink) config.sink = Point2{};
      config.sink->x = parse_double(origin, line, value);
    } else if (path == "network.sink_y") {
      if (!config.sink) config.sink = Point2{};
      config.sink->y = parse_double(origin, line, value);
    } else if (path == "cs.gamma") {
      config.gamma_pct = parse_double(origin, line, value);
    } else if (path == "cs.thr") {
      config.t_hr = parse_double(origin, line, value);
    } else if (path == "cs.basis") {
      const auto kind = basis_kind_from_string(value);
      if (!kind) config_error(origin, line, "unknown basis '" + value + "'");
      config.basis = *kind;
    } else if (path == "cs.slnm") {
      config.slnm = parse_int(origin, line, value) != 0;
    } else if (path == "cs.e_th") {
      config.e_th = parse_double(origin, line, value);
    } else if (path == "cs.omp_max_atoms") {
      config.omp_max_atoms = static_cast<int>(parse_int(origin, line, value));
    } else if (path == "run.seed") {
      config.seed = static_cast<std::uint64_t>(parse_int(origin, line, value));
    } else if (path == "run.trials") {
      config.trials = static_cast<int>(parse_int(origin, line, value));
    } else if (path == "run.out_dir") {
      config.out_dir = value;
    } else if (path == "sweep.ric_gammas") {
      for (const auto& item : split_list(value))
        config.ric_gammas.push_back(parse_double(origin, line, item));
      ric_set = true;
    } else if (path == "sweep.m_values") {
      for (const auto& item : split_list(value))
        config.m_values.push_back(static_cast<int>(parse_int(origin, line, item)));
    } else if (path == "sweep.phase_rho") {
      for (const auto& item : split_list(value))
        config.phase_rho.push_back(parse_double(origin, line, item));
    } else if (path == "sweep.cost_gammas") {
      for (const auto& item : split_list(value))
        config.cost_gammas.push_back(parse_double(origin, line, item));
    } else if (path == "sweep.density_values") {
      for (const auto& item : split_list(value))
        config.density_values.push_back(
            static_cast<int>(parse_int(origin, line, item)));
    } else if (path == "sweep.sink_positions") {
      config.sink_positions = static_cast<int>(parse_int(origin, line, value));
    } else {
      config_error(origin, line, "unknown key '" + path + "'");
    }
  }
  if (!ric_set) config.ric_gammas = ExperimentConfig{}.ric_gammas;
  config.validate();
  return config;
}

ExperimentConfig load_config(const fs::path& path) {
  return config_from_text(read_text_file(path), path.string());
}

NetworkTopology build_topology(const ExperimentConfig& config) {
  DeploymentSpec spec;
  spec.kind = config.deployment;
  spec.n = config.n;
  spec.area = config.area;
  NetworkTopology topo = deploy(spec, config.seed, config.sink);
  if (config.slnm && config.deployment == DeploymentSpec::Kind::Random) {
    auto rng = make_rng(config.seed, "slnm-start");
    std::uniform_int_distribution<int> pick(0, topo.node_count() - 1);
    topo = apply_permutation(topo, slnm_chain(topo, pick(rng)));
  }
  return topo;
}

SparseMeasurementMatrix generate_phi_exact(const NetworkTopology& topo, int m,
                                           std::uint64_t seed) {
  const auto heads = select_cluster_heads_exact(topo, m, seed);
  const auto assignment = assign_leaves(topo, heads);
  return build_phi(assignment, seed);
}

namespace {

Basis basis_for(const ExperimentConfig& config, const NetworkTopology& topo) {
  return make_basis(config.basis, topo.node_count(),
                    config.basis == BasisKind::Laplacian ? &topo : nullptr);
}

CsvWriter cost_csv() {
  return CsvWriter("cost.v1",
                   {"scheme", "gamma", "seed", "N", "sink_x", "sink_y", "T_cst"});
}

void append_cost_row(CsvWriter& csv, const CostRow& row) {
  csv.add_row({row.scheme, fmt_double(row.gamma_pct), std::to_string(row.run),
               std::to_string(row.n), fmt_double(row.sink.x),
               fmt_double(row.sink.y), fmt_double(row.cost)});
}

CostRow to_row(const CostReport& report, double gamma_pct, std::uint64_t run) {
  CostRow row;
  row.scheme = report.scheme;
  row.gamma_pct = gamma_pct;
  row.run = run;
  row.n = report.n;
  row.sink = report.sink;
  row.cost = report.total_cost;
  return row;
}

}  // namespace

AggregateSummary run_aggregate(const ExperimentConfig& config) {
  config.validate();
  const fs::path out(config.out_dir);

  const NetworkTopology topo = build_topology(config);
  const double t_hr = config.resolved_t_hr();

  const auto heads = select_cluster_heads(topo, t_hr, config.seed);
  const auto assignment = assign_leaves(topo, heads);
  const auto tree = build_ch_mst(topo, heads);
  const auto steady = schedule_traffic(assignment, tree, Cycle::Steady);
  const auto bootstrap = schedule_traffic(assignment, tree, Cycle::Bootstrap);

  const auto phi = build_phi(assignment, config.seed);
  const ScalarField field =
      default_field(substream_seed(config.seed, "field"), config.area);
  const Eigen::VectorXd x = sample_field(field, topo);
  const Eigen::VectorXd y = apply_phi(phi, x);

  const Basis basis = basis_for(config, topo);
  const auto recovery = recover_signal(phi, basis, y, config.omp_max_atoms);
  const double error = recon_error(x, recovery.x_hat);
  const double sparsity = numerical_sparsity(basis, x);

  const auto lwcda_steady = lwcda_cost(topo, assignment, tree, steady);
  auto lwcda_bootstrap = lwcda_cost(topo, assignment, tree, bootstrap);
  lwcda_bootstrap.scheme = "lwcda-bootstrap";
  const auto noncs = noncs_cost(topo);

  AggregateSummary summary;
  summary.n = config.n;
  summary.m = assignment.cluster_count();
  summary.t_hr = t_hr;
  summary.gamma_pct =
      (1.0 - static_cast<double>(summary.m) / config.n) * 100.0;
  summary.recon_error = error;
  summary.numerical_sparsity = sparsity;
  summary.omp_iterations = recovery.iterations;
  summary.lwcda_steady_cost = lwcda_steady.total_cost;
  summary.lwcda_bootstrap_cost = lwcda_bootstrap.total_cost;
  summary.noncs_total_cost = noncs.total_cost;

  auto save = [&](const fs::path& name, const std::string& content) {
    const fs::path path = out / name;
    write_text_file(path, content);
    summary.files.push_back(path);
  };

  save("topology.txt", topology_to_text(topo));
  save("assignment.txt", assignment_to_text(assignment));
  save("phi.txt", phi_to_text(phi));

  {
    CsvWriter csv("measurements.v1", {"j", "y"});
    for (int j = 0; j < y.size(); ++j)
      csv.add_row({std::to_string(j), fmt_double(y[j])});
    save("y.csv", csv.str());
  }
  {
    CsvWriter csv("recovery.v1", {"i", "x", "x_hat"});
    for (int i = 0; i < x.size(); ++i)
      csv.add_row({std::to_string(i), fmt_double(x[i]),
                   fmt_double(recovery.x_hat[i])});
    save("xhat.csv", csv.str());
  }
  for (const auto& [name, ledger] :
       {std::pair{std::string("traffic_steady.csv"), &steady},
        std::pair{std::string("traffic_bootstrap.csv"), &bootstrap}}) {
    CsvWriter csv("traffic.v1", {"src", "dst", "packets", "octets"});
    for (const auto& [link, traffic] : ledger->links) {
      csv.add_row({std::to_string(link.first), std::to_string(link.second),
                   std::to_string(traffic.packets),
                   std::to_string(traffic.payload_octets)});
    }
    save(name, csv.str());
  }
  {
    CsvWriter csv = cost_csv();
    append_cost_row(csv, to_row(lwcda_steady, summary.gamma_pct, 0));
    append_cost_row(csv, to_row(lwcda_bootstrap, summary.gamma_pct, 0));
    append_cost_row(csv, to_row(noncs, 0.0, 0));
    save("cost.csv", csv.str());
  }
  {
    CsvWriter csv("aggregate_summary.v1",
                  {"n", "m", "t_hr", "gamma", "basis", "slnm", "recon_error",
                   "numerical_sparsity", "omp_iterations"});
    csv.add_row({std::to_string(summary.n), std::to_string(summary.m),
                 fmt_double(summary.t_hr), fmt_double(summary.gamma_pct),
                 to_string(config.basis), config.slnm ? "1" : "0",
                 fmt_double(summary.recon_error),
                 fmt_double(summary.numerical_sparsity),
                 std::to_string(summary.omp_iterations)});
    save("summary.csv", csv.str());
  }
  return summary;
}

std::vector<RicRow> compute_ric_sweep(const ExperimentConfig& config) {
  config.validate();
  const NetworkTopology topo = build_topology(config);
  const Basis basis = basis_for(config, topo);
  const int trials = config.trials > 0 ? config.trials : 2000;

  std::vector<RicRow> rows;
  for (std::size_t gi = 0; gi < config.ric_gammas.size(); ++gi) {
    const double gamma = config.ric_gammas[gi];
    const int m = std::max(
        1, static_cast<int>(std::lround(config.n * (1.0 - gamma / 100.0))));
    const auto phi = generate_phi_exact(
        topo, m, substream_seed(config.seed, "ric-phi", gi));

    const auto analyzer =
        basis.is_complex()
            ? RicAnalyzer(cs_matrix(phi, basis.matrix_cplx()))
            : RicAnalyzer(cs_matrix(phi, basis.matrix_real()));

    const int admissible = analyzer.max_admissible_k(trials, config.seed);
    const int k_stop =
        std::min(m, std::max(admissible + 3, admissible + admissible / 3));
    const int stride = std::max(1, (k_stop + 31) / 32);
    for (int k = 1; k <= k_stop; k += stride) {
      const auto estimate = analyzer.estimate(k, trials, config.seed);
      rows.push_back({gamma, k, estimate.delta_k, estimate.lambda_min,
                      estimate.lambda_max});
    }
  }
  return rows;
}

std::filesystem::path run_ric(const ExperimentConfig& config) {
  const auto rows = compute_ric_sweep(config);
  const fs::path out(config.out_dir);
  std::map<double, CsvWriter> files;
  for (const auto& row : rows) {
    auto [it, inserted] = files.try_emplace(
        row.gamma_pct,
        CsvWriter("ric.v1", {"k", "delta_k", "lambda_min", "lambda_max"}));
    it->second.add_row({std::to_string(row.k), fmt_double(row.delta_k),
                        fmt_double(row.lambda_min), fmt_double(row.lambda_max)});
  }
  for (const auto& [gamma, csv] : files) {
    std::ostringstream name;
    name << "ric_" << to_string(config.basis) << "_g"
         << static_cast<int>(std::lround(gamma)) << ".csv";
    csv.write(out / name.str());
  }
  return out;
}

std::vector<CoherenceRow> compute_coherence_sweep(const ExperimentConfig& config) {
  config.validate();
  const NetworkTopology topo = build_topology(config);
  const Basis basis = basis_for(config, topo);
  const int trials = config.trials > 0 ? config.trials : 10;
  const auto m_axis =
      config.m_values.empty() ? default_m_axis() : config.m_values;

  std::vector<CoherenceRow> rows(m_axis.size());
  parallel_for(static_cast<int>(m_axis.size()), [&](int mi) {
    const int m = m_axis[mi];
    double mu_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t phi_seed = substream_seed(
          config.seed, "coherence-phi",
          static_cast<std::uint64_t>(mi) * trials + t);
      const auto phi = generate_phi_exact(topo, m, phi_seed);
      mu_sum += basis.is_complex()
                    ? coherence(cs_matrix(phi, basis.matrix_cplx()))
                    : coherence(cs_matrix(phi, basis.matrix_real()));
    }
    rows[mi] = {m, (1.0 - static_cast<double>(m) / config.n) * 100.0,
                mu_sum / trials, trials};
  });
  return rows;
}

std::filesystem::path run_coherence(const ExperimentConfig& config) {
  const auto rows = compute_coherence_sweep(config);
  CsvWriter csv("coherence.v1", {"M", "gamma", "mu", "trials"});
  for (const auto& row : rows) {
    csv.add_row({std::to_string(row.m), fmt_double(row.gamma_pct),
                 fmt_double(row.mu_mean), std::to_string(row.trials)});
  }
  const fs::path path =
      fs::path(config.out_dir) /
      ("coherence_" + to_string(config.basis) + ".csv");
  csv.write(path);
  return path;
}

PhaseDiagram compute_phase(const ExperimentConfig& config) {
  config.validate();
  const NetworkTopology topo = build_topology(config);
  const Basis basis = basis_for(config, topo);

  PhaseGridSpec spec;
  spec.n = config.n;
  spec.rho = config.phase_rho.empty() ? default_rho_axis() : config.phase_rho;
  spec.m_values = config.m_values.empty() ? default_m_axis() : config.m_values;
  for (const int m : spec.m_values) {
    if (m < 1 || m > config.n)
      throw std::invalid_argument("phase: M values must lie in [1, N]");
  }

  const int trials = config.trials > 0 ? config.trials : 50;
  const PhiGenerator generator = [&topo](int m, std::uint64_t seed) {
    return generate_phi_exact(topo, m, seed);
  };
  return phase_transition(generator, basis, spec, trials, config.e_th,
                          config.seed);
}

std::filesystem::path run_phase(const ExperimentConfig& config) {
  const PhaseDiagram diagram = compute_phase(config);
  CsvWriter csv("phase.v1",
                {"k_over_M", "one_minus_M_over_N", "P_s", "trials"});
  for (const auto& cell : diagram.cells) {
    csv.add_row({fmt_double(cell.rho), fmt_double(cell.delta),
                 fmt_double(cell.success_rate), std::to_string(cell.trials)});
  }
  const fs::path path = fs::path(config.out_dir) /
                        ("phase_" + to_string(config.basis) + ".csv");
  csv.write(path);
  return path;
}

namespace {

std::vector<CostRow> cost_rows_for(const ExperimentConfig& config,
                                   const std::vector<double>& gammas,
                                   const std::vector<int>& densities) {
  const int repeats = config.trials > 0 ? config.trials : 20;

  struct Job {
    double gamma;
    int n;
    int repeat;
  };
  std::vector<Job> jobs;
  for (const int n : densities) {
    for (const double gamma : gammas) {
      for (int r = 0; r < repeats; ++r) jobs.push_back({gamma, n, r});
    }
  }

  std::vector<std::vector<CostRow>> results(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), [&](int ji) {
    const Job& job = jobs[ji];
    const std::uint64_t run_seed =
        substream_seed(config.seed, "cost-run",
                       static_cast<std::uint64_t>(ji));
    DeploymentSpec spec{config.deployment, job.n, config.area};
    const NetworkTopology topo = deploy(spec, run_seed, config.sink);

    std::vector<CostRow> rows;
    auto cycle = run_lwcda_cycle(topo, 1.0 - job.gamma / 100.0, run_seed);
    rows.push_back(to_row(cycle.steady_cost, job.gamma, job.repeat));
    rows.push_back(to_row(cycle.bootstrap_cost, job.gamma, job.repeat));
    rows.push_back(to_row(sprm_cost(topo, job.gamma / 100.0, run_seed),
                          job.gamma, job.repeat));
    rows.push_back(to_row(noncs_cost(topo), job.gamma, job.repeat));
    results[ji] = std::move(rows);
  });

  std::vector<CostRow> rows;
  for (auto& batch : results)
    for (auto& row : batch) rows.push_back(std::move(row));
  return rows;
}

}  // namespace

std::vector<CostRow> compute_cost_sweep(const ExperimentConfig& config) {
  config.validate();
  const auto gammas =
      config.cost_gammas.empty() ? default_cost_gammas() : config.cost_gammas;
  return cost_rows_for(config, gammas, {config.n});
}

std::filesystem::path run_cost_sweep(const ExperimentConfig& config) {
  const auto rows = compute_cost_sweep(config);
  CsvWriter csv = cost_csv();
  for (const auto& row : rows) append_cost_row(csv, row);
  const fs::path path = fs::path(config.out_dir) / "cost_sweep.csv";
  csv.write(path);
  return path;
}

std::vector<CostRow> compute_density_sweep(const ExperimentConfig& config) {
  config.validate();
  std::vector<int> densities = config.density_values;
  if (densities.empty()) densities = default_m_axis();
  return cost_rows_for(config, {config.resolved_gamma_pct()}, densities);
}

std::filesystem::path run_density_sweep(const ExperimentConfig& config) {
  const auto rows = compute_density_sweep(config);
  CsvWriter csv = cost_csv();
  for (const auto& row : rows) append_cost_row(csv, row);
  const fs::path path = fs::path(config.out_dir) / "density_sweep.csv";
  csv.write(path);
  return path;
}

std::vector<CostRow> compute_sink_sweep(const ExperimentConfig& config) {
  config.validate();
  const int count = config.sink_positions;
  std::vector<Point2> positions;
  for (int i = 0; i < count; ++i) {
    const double t =
        count == 1 ? 0.5 : static_cast<double>(i) / (count - 1);
    positions.push_back({t * config.area.width, t * config.area.height});
  }
  const int repeats = config.trials > 0 ? config.trials : 20;
  std::vector<std::uint64_t> seeds;
  for (int r = 0; r < repeats; ++r)
    seeds.push_back(substream_seed(config.seed, "sink-run", r));

  DeploymentSpec spec{config.deployment, config.n, config.area};
  const auto reports =
      sink_sweep(spec, config.resolved_gamma_pct() / 100.0, positions, seeds);

  std::vector<CostRow> rows;
  std::uint64_t run = 0;
  for (const auto& report : reports) {
    rows.push_back(to_row(report, config.resolved_gamma_pct(), run / 3 % repeats));
    ++run;
  }
  return rows;
}

std::filesystem::path run_sink_sweep(const ExperimentConfig& config) {
  const auto rows = compute_sink_sweep(config);
  CsvWriter csv = cost_csv();
  for (const auto& row : rows) append_cost_row(csv, row);
  const fs::path path = fs::path(config.out_dir) / "sink_sweep.csv";
  csv.write(path);
  return path;
}

std::filesystem::path run_field(const ExperimentConfig& config) {
  config.validate();
  const ScalarField field =
      default_field(substream_seed(config.seed, "field"), config.area);
  CsvWriter csv("field.v1", {"x", "y", "value"});
  constexpr int kRaster = 64;
  for (int i = 0; i < kRaster; ++i) {
    for (int j = 0; j < kRaster; ++j) {
      const Point2 p{(j + 0.5) * config.area.width / kRaster,
                     (i + 0.5) * config.area.height / kRaster};
      csv.add_row({fmt_double(p.x), fmt_double(p.y), fmt_double(field.value(p))});
    }
  }
  const fs::path path = fs::path(config.out_dir) / "field.csv";
  csv.write(path);
  return path;
}

}  // namespace lwcda
