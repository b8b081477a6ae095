#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lwcda/cluster_routing.hpp"
#include "lwcda/net_topology.hpp"

namespace lwcda {

/// Transmission cost of one aggregation cycle: sum over links of packet
/// count times Euclidean link length (packet-meters).
struct CostReport {
  std::string scheme;
  double gamma_pct = 0.0;
  double total_cost = 0.0;
  std::map<std::pair<NodeId, NodeId>, double> link_cost;

  // run metadata for sweep CSVs
  int n = 0;
  std::uint64_t seed = 0;
  Point2 sink;
};

/// Cost of the clustered aggregation cycle described by the ledger.
CostReport lwcda_cost(const NetworkTopology& topo,
                      const ClusterAssignment& assignment, const ChTree& tree,
                      const TrafficLedger& ledger);

/// Baseline without compression: every node sends one packet per cycle to
/// the sink along its shortest path, no aggregation.
CostReport noncs_cost(const NetworkTopology& topo);

/// Random-subset baseline: round((1 - gamma) * N) uniformly chosen nodes
/// each send one packet along the shortest path to the sink.
CostReport sprm_cost(const NetworkTopology& topo, double gamma,
                     std::uint64_t seed);

/// 100 * cost(P) / cost(Q).
double disbursed_pct(const CostReport& p, const CostReport& q);

/// (1 - cost(P) / cost(Q)) * 100.
double saved_pct(const CostReport& p, const CostReport& q);

struct DeploymentSpec {
  enum class Kind { Grid, Random };
  Kind kind = Kind::Grid;
  int n = 0;
  Rect area;
};

NetworkTopology deploy(const DeploymentSpec& spec, std::uint64_t seed,
                       std::optional<Point2> sink = {});

/// Full clustered-aggregation cycle for cost studies: Bernoulli CH election
/// at t_hr, leaf assignment, CH MST, steady and bootstrap ledgers.
struct LwcdaCycle {
  ClusterAssignment assignment;
  ChTree tree;
  TrafficLedger steady;
  TrafficLedger bootstrap;
  CostReport steady_cost;
  CostReport bootstrap_cost;
};

LwcdaCycle run_lwcda_cycle(const NetworkTopology& topo, double t_hr,
                           std::uint64_t seed);

/// Re-run the full pipeline for each sink position; one report per
/// (position, seed, scheme), schemes being lwcda / sprm / noncs.
std::vector<CostReport> sink_sweep(const DeploymentSpec& spec, double gamma,
                                   const std::vector<Point2>& sink_positions,
                                   const std::vector<std::uint64_t>& seeds);

}  // namespace lwcda
