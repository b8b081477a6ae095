#include <doctest.h>

#include <filesystem>
#include <set>

#include "lwcda/experiments.hpp"
#include "lwcda/io.hpp"
#include "lwcda/recovery.hpp"

using namespace lwcda;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lwcda_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config round-trips through its text form") {
  ExperimentConfig config;
  config.deployment = DeploymentSpec::Kind::Random;
  config.n = 256;
  config.area = {120.0, 90.0};
  config.sink = Point2{10.0, 20.0};
  config.gamma_pct = 42.5;
  config.basis = BasisKind::DwtDb4;
  config.slnm = true;
  config.seed = 987654321;
  config.trials = 17;
  config.e_th = 1e-6;
  config.omp_max_atoms = 9;
  config.out_dir = "results/run1";
  config.m_values = {50, 100};
  config.phase_rho = {0.25, 0.5};
  config.cost_gammas = {20.0, 40.0};
  config.density_values = {100, 200};
  config.sink_positions = 3;

  const std::string text = config_to_text(config);
  const ExperimentConfig parsed = config_from_text(text);
  CHECK(parsed == config);
}

TEST_CASE("config errors carry the offending line") {
  const std::string bad =
      "[network]\n"
      "n = 10\n"
      "frobnicate = 3\n";
  try {
    config_from_text(bad, "test.ini");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("test.ini:3") != std::string::npos);
    CHECK(std::string(err.what()).find("frobnicate") != std::string::npos);
  }

  CHECK_THROWS_AS(config_from_text("[network]\nn = ten\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_text("[nope]\n"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_text("n 10\n"), std::invalid_argument);
}

TEST_CASE("config validation rejects contradictions") {
  ExperimentConfig config;
  config.gamma_pct = 50.0;
  config.t_hr = 0.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ExperimentConfig{};
  config.gamma_pct = 100.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ExperimentConfig{};
  config.e_th = 0.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ExperimentConfig{};
  config.sink = Point2{500.0, 0.0};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("gamma and threshold derive from each other") {
  ExperimentConfig config;
  config.gamma_pct = 60.0;
  CHECK(config.resolved_t_hr() == doctest::Approx(0.4));
  config.gamma_pct.reset();
  config.t_hr = 0.25;
  CHECK(config.resolved_gamma_pct() == doctest::Approx(75.0));
}

TEST_CASE("aggregate is reproducible byte for byte") {
  ExperimentConfig config;
  config.n = 100;
  config.gamma_pct = 60.0;
  config.seed = 5;
  config.out_dir = fresh_dir("agg_a").string();
  const auto first = run_aggregate(config);

  config.out_dir = fresh_dir("agg_b").string();
  const auto second = run_aggregate(config);

  CHECK(first.recon_error == second.recon_error);
  REQUIRE(first.files.size() == second.files.size());
  for (std::size_t i = 0; i < first.files.size(); ++i) {
    CHECK(read_text_file(first.files[i]) == read_text_file(second.files[i]));
  }
}

TEST_CASE("aggregate at gamma zero recovers exactly") {
  ExperimentConfig config;
  config.n = 100;
  config.gamma_pct = 0.0;
  config.seed = 3;
  config.out_dir = fresh_dir("agg_g0").string();
  const auto summary = run_aggregate(config);
  CHECK(summary.m == 100);
  CHECK(summary.recon_error < 1e-9);
}

TEST_CASE("aggregate writes the expected artifact set") {
  ExperimentConfig config;
  config.n = 64;
  config.gamma_pct = 50.0;
  config.out_dir = fresh_dir("agg_files").string();
  const auto summary = run_aggregate(config);
  std::set<std::string> names;
  for (const auto& file : summary.files) names.insert(file.filename().string());
  for (const char* expected :
       {"topology.txt", "assignment.txt", "phi.txt", "y.csv", "xhat.csv",
        "traffic_steady.csv", "traffic_bootstrap.csv", "cost.csv",
        "summary.csv"}) {
    CHECK(names.count(expected) == 1);
  }

  // the topology file round-trips losslessly
  const auto topo = build_topology(config);
  const auto parsed = topology_from_text(
      read_text_file(fs::path(config.out_dir) / "topology.txt"));
  CHECK(parsed.node_count() == topo.node_count());
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    CHECK(parsed.position(v).x == topo.position(v).x);
    CHECK(parsed.position(v).y == topo.position(v).y);
  }
  CHECK(parsed.comm_range() == topo.comm_range());
}

TEST_CASE("slnm lowers the mean dft recovery error on random layouts") {
  // Paired comparison over seeds; chain relabeling makes the sampled field
  // smooth in id order, which the DFT exploits.
  const int seeds = 20;
  double with_slnm = 0.0;
  double without_slnm = 0.0;
  for (int s = 0; s < seeds; ++s) {
    ExperimentConfig config;
    config.deployment = DeploymentSpec::Kind::Random;
    config.n = 1024;
    config.gamma_pct = 50.0;
    config.basis = BasisKind::Dft;
    config.seed = 1000 + s;
    config.out_dir = fresh_dir("slnm_" + std::to_string(s)).string();

    config.slnm = true;
    with_slnm += run_aggregate(config).recon_error;

    config.slnm = false;
    config.out_dir = fresh_dir("noslnm_" + std::to_string(s)).string();
    without_slnm += run_aggregate(config).recon_error;
  }
  CHECK(with_slnm / seeds < without_slnm / seeds);
}

TEST_CASE("coherence sweep emits one row per M") {
  ExperimentConfig config;
  config.n = 100;
  config.trials = 2;
  config.m_values = {10, 20, 30, 40, 50, 60, 70, 80, 90};
  config.out_dir = fresh_dir("coh").string();
  const auto rows = compute_coherence_sweep(config);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].m == static_cast<int>(10 * (i + 1)));
    CHECK(rows[i].mu_mean > 0.0);
    CHECK(rows[i].mu_mean <= 1.0);
  }
  const fs::path file = run_coherence(config);
  const std::string text = read_text_file(file);
  CHECK(text.find("# schema=coherence.v1") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 11);  // schema+header+9
}

TEST_CASE("single-trial phase cells are bernoulli") {
  ExperimentConfig config;
  config.n = 64;
  config.trials = 1;
  config.m_values = {16, 32};
  config.phase_rho = {0.2, 0.6};
  config.out_dir = fresh_dir("phase").string();
  const auto diagram = compute_phase(config);
  REQUIRE(diagram.cells.size() == 4);
  for (const auto& cell : diagram.cells) {
    CHECK((cell.success_rate == 0.0 || cell.success_rate == 1.0));
  }
  run_phase(config);
  CHECK(fs::exists(fs::path(config.out_dir) / "phase_dct.csv"));
}

TEST_CASE("cost sweep emits rows for every scheme and gamma") {
  ExperimentConfig config;
  config.n = 64;
  config.trials = 2;
  config.cost_gammas = {10, 20, 30, 40, 50, 60, 70, 80, 90};
  config.out_dir = fresh_dir("cost").string();
  const auto rows = compute_cost_sweep(config);
  // 9 gammas x 2 repeats x 4 schemes (steady, bootstrap, sprm, noncs)
  REQUIRE(rows.size() == 9 * 2 * 4);
  std::set<std::string> schemes;
  for (const auto& row : rows) schemes.insert(row.scheme);
  CHECK(schemes ==
        std::set<std::string>{"lwcda", "lwcda-bootstrap", "sprm", "noncs"});
  run_cost_sweep(config);
  CHECK(fs::exists(fs::path(config.out_dir) / "cost_sweep.csv"));
}

TEST_CASE("density sweep varies the node count") {
  ExperimentConfig config;
  config.trials = 1;
  config.gamma_pct = 50.0;
  config.density_values = {25, 49};
  config.out_dir = fresh_dir("density").string();
  const auto rows = compute_density_sweep(config);
  std::set<int> ns;
  for (const auto& row : rows) ns.insert(row.n);
  CHECK(ns == std::set<int>{25, 49});
}

TEST_CASE("sink sweep covers the diagonal") {
  ExperimentConfig config;
  config.n = 36;
  config.area = {60.0, 60.0};
  config.trials = 2;
  config.sink_positions = 3;
  config.gamma_pct = 50.0;
  config.out_dir = fresh_dir("sink").string();
  const auto rows = compute_sink_sweep(config);
  REQUIRE(rows.size() == 3 * 2 * 3);  // positions x seeds x schemes
  std::set<double> xs;
  for (const auto& row : rows) {
    CHECK(row.sink.x == row.sink.y);
    xs.insert(row.sink.x);
  }
  CHECK(xs == std::set<double>{0.0, 30.0, 60.0});
}

TEST_CASE("field command writes the raster") {
  ExperimentConfig config;
  config.out_dir = fresh_dir("field").string();
  const fs::path file = run_field(config);
  const std::string text = read_text_file(file);
  CHECK(text.find("# schema=field.v1") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 64 * 64);
}
