#include "lwcda/cost_model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lwcda/rng.hpp"

namespace lwcda {

namespace {

void stamp_metadata(CostReport& report, const NetworkTopology& topo,
                    std::uint64_t seed) {
  report.n = topo.node_count();
  report.seed = seed;
  report.sink = topo.sink_position();
}

}  // namespace

CostReport lwcda_cost(const NetworkTopology& topo,
                      const ClusterAssignment& assignment, const ChTree& tree,
                      const TrafficLedger& ledger) {
  if (assignment.node_count() != topo.node_count())
    throw std::invalid_argument("lwcda_cost: assignment does not match topology");
  (void)tree;

  CostReport report;
  report.scheme = "lwcda";
  report.gamma_pct =
      (1.0 - static_cast<double>(assignment.cluster_count()) / topo.node_count()) *
      100.0;
  for (const auto& [link, traffic] : ledger.links) {
    const double length = distance(topo.position(link.first),
                                   topo.position(link.second));
    const double cost = static_cast<double>(traffic.packets) * length;
    report.link_cost[link] = cost;
    report.total_cost += cost;
  }
  stamp_metadata(report, topo, 0);
  return report;
}

namespace {

CostReport shortest_path_collection(const NetworkTopology& topo,
                                    const std::vector<NodeId>& senders,
                                    const std::string& scheme) {
  const auto tree = shortest_paths(topo, topo.sink_id());
  std::map<std::pair<NodeId, NodeId>, long> packets;
  for (const NodeId sender : senders) {
    for (NodeId v = sender; v != topo.sink_id(); v = tree.parent[v]) {
      packets[{v, tree.parent[v]}] += 1;
    }
  }
  CostReport report;
  report.scheme = scheme;
  for (const auto& [link, count] : packets) {
    const double length =
        distance(topo.position(link.first), topo.position(link.second));
    const double cost = static_cast<double>(count) * length;
    report.link_cost[link] = cost;
    report.total_cost += cost;
  }
  return report;
}

}  // namespace

CostReport noncs_cost(const NetworkTopology& topo) {
  std::vector<NodeId> all(topo.node_count());
  std::iota(all.begin(), all.end(), 0);
  CostReport report = shortest_path_collection(topo, all, "noncs");
  stamp_metadata(report, topo, 0);
  return report;
}

CostReport sprm_cost(const NetworkTopology& topo, double gamma,
                     std::uint64_t seed) {
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("sprm_cost: gamma must lie in [0, 1)");
  const int n = topo.node_count();
  const int m = static_cast<int>(std::lround((1.0 - gamma) * n));
  if (m < 1)
    throw std::invalid_argument("sprm_cost: compression leaves zero senders");

  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  auto rng = make_rng(seed, "sprm-subset");
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(m);

  CostReport report = shortest_path_collection(topo, ids, "sprm");
  report.gamma_pct = gamma * 100.0;
  stamp_metadata(report, topo, seed);
  return report;
}

double disbursed_pct(const CostReport& p, const CostReport& q) {
  if (q.total_cost == 0.0)
    throw std::invalid_argument("disbursed_pct: reference cost is zero");
  return 100.0 * p.total_cost / q.total_cost;
}

double saved_pct(const CostReport& p, const CostReport& q) {
  if (q.total_cost == 0.0)
    throw std::invalid_argument("saved_pct: reference cost is zero");
  return (1.0 - p.total_cost / q.total_cost) * 100.0;
}

NetworkTopology deploy(const DeploymentSpec& spec, std::uint64_t seed,
                       std::optional<Point2> sink) {
  switch (spec.kind) {
    case DeploymentSpec::Kind::Grid:
      return deploy_grid(spec.n, spec.area, sink);
    case DeploymentSpec::Kind::Random:
      return deploy_random(spec.n, spec.area, seed, sink);
  }
  throw std::logic_error("unknown deployment kind");
}

LwcdaCycle run_lwcda_cycle(const NetworkTopology& topo, double t_hr,
                           std::uint64_t seed) {
  LwcdaCycle cycle;
  const auto heads = select_cluster_heads(topo, t_hr, seed);
  cycle.assignment = assign_leaves(topo, heads);
  cycle.tree = build_ch_mst(topo, heads);
  cycle.steady = schedule_traffic(cycle.assignment, cycle.tree, Cycle::Steady);
  cycle.bootstrap =
      schedule_traffic(cycle.assignment, cycle.tree, Cycle::Bootstrap);
  cycle.steady_cost = lwcda_cost(topo, cycle.assignment, cycle.tree, cycle.steady);
  cycle.bootstrap_cost =
      lwcda_cost(topo, cycle.assignment, cycle.tree, cycle.bootstrap);
  cycle.bootstrap_cost.scheme = "lwcda-bootstrap";
  cycle.steady_cost.seed = seed;
  cycle.bootstrap_cost.seed = seed;
  return cycle;
}

std::vector<CostReport> sink_sweep(const DeploymentSpec& spec, double gamma,
                                   const std::vector<Point2>& sink_positions,
                                   const std::vector<std::uint64_t>& seeds) {
  for (const auto& pos : sink_positions) {
    if (pos.x < 0 || pos.x > spec.area.width || pos.y < 0 ||
        pos.y > spec.area.height)
      throw std::invalid_argument("sink_sweep: sink position outside the area");
  }
  const double t_hr = 1.0 - gamma;

  std::vector<CostReport> reports;
  for (const auto& pos : sink_positions) {
    for (const std::uint64_t seed : seeds) {
      const NetworkTopology topo = deploy(spec, seed, pos);

      auto cycle = run_lwcda_cycle(topo, t_hr, seed);
      cycle.steady_cost.gamma_pct = gamma * 100.0;
      reports.push_back(std::move(cycle.steady_cost));

      CostReport sprm = sprm_cost(topo, gamma, seed);
      reports.push_back(std::move(sprm));

      CostReport noncs = noncs_cost(topo);
      noncs.seed = seed;
      reports.push_back(std::move(noncs));
    }
  }
  return reports;
}

}  // namespace lwcda
