#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lwcda/net_topology.hpp"

namespace lwcda {

/// Non-overlapping partition of the sensor nodes into M clusters, one per
/// cluster head. Cluster index j is the rank of its head in ascending id
/// order, so j doubles as the row index of the measurement matrix.
struct ClusterAssignment {
  std::vector<NodeId> cluster_heads;            // ascending
  std::vector<int> member_of;                   // node -> cluster index
  std::vector<std::vector<NodeId>> leaf_paths;  // leaf -> ... -> CH; empty for CHs

  int cluster_count() const { return static_cast<int>(cluster_heads.size()); }
  int node_count() const { return static_cast<int>(member_of.size()); }
  bool is_cluster_head(NodeId v) const { return leaf_paths[v].empty(); }

  /// Member ids per cluster, ascending. Signed measurement sums follow this
  /// order; the distributed protocol simulation must sum identically for the
  /// bit-exactness contract on Y = Phi X.
  std::vector<std::vector<NodeId>> members_by_cluster() const;
};

/// Bernoulli CH election: node i becomes a CH iff its uniform draw is <=
/// t_hr. An election with zero CHs is redrawn from a derived sub-seed, at
/// most 100 times.
std::vector<NodeId> select_cluster_heads(const NetworkTopology& topo,
                                         double t_hr, std::uint64_t seed);

/// Pick exactly m cluster heads uniformly at random. The analysis studies
/// (RIC, coherence, phase transition) prescribe exact measurement counts,
/// which the threshold election only hits in expectation.
std::vector<NodeId> select_cluster_heads_exact(const NetworkTopology& topo,
                                               int m, std::uint64_t seed);

/// Attach every non-CH node to the CH with the smallest shortest-path
/// distance (Euclidean edge weights, sensor-only graph); ties go to the
/// lowest CH id. Relay nodes on a leaf's path keep their own membership.
ClusterAssignment assign_leaves(const NetworkTopology& topo,
                                const std::vector<NodeId>& ch_set);

/// Spanning tree over the cluster heads and the sink, rooted at the sink.
struct ChTree {
  struct Edge {
    NodeId child;                // CH
    NodeId parent;               // CH or sink
    double weight;               // shortest-path distance
    std::vector<NodeId> path;    // realized multi-hop route child -> parent
  };
  std::vector<Edge> edges;       // |edges| == number of CHs
};

/// Kruskal MST over ch_set plus the sink with shortest-path distances as
/// weights; equal weights break ties by lexicographic endpoint ids. Each
/// tree edge carries its realized multi-hop route through the connectivity
/// graph.
ChTree build_ch_mst(const NetworkTopology& topo,
                    const std::vector<NodeId>& ch_set);

enum class Cycle { Steady, Bootstrap };

// ZigBee application payload model.
inline constexpr int kPayloadCapacityOctets = 87;
inline constexpr int kSampleOctets = 2;
inline constexpr int kAddressOctets = 2;
inline constexpr int kMeasurementOctets = kSampleOctets + kAddressOctets;
/// alpha sign plus short address shipped once per cluster member during the
/// bootstrap cycle.
inline constexpr int kAlphaRecordOctets = 3;

struct LinkTraffic {
  long packets = 0;
  long payload_octets = 0;
};

/// Packet counts per directed link for one aggregation cycle.
struct TrafficLedger {
  std::map<std::pair<NodeId, NodeId>, LinkTraffic> links;

  long packets_on(NodeId from, NodeId to) const;
  long total_packets() const;
};

/// Per-cycle traffic: each leaf forwards one packet per hop to its CH;
/// CH-to-sink transport packs measurements greedily into 87-octet payloads,
/// re-packing at every tree hop (ceil(accumulated octets / capacity) packets
/// per hop). The bootstrap cycle additionally ships 3 octets per cluster
/// member from each CH toward the sink.
TrafficLedger schedule_traffic(const ClusterAssignment& assignment,
                               const ChTree& tree, Cycle cycle);

}  // namespace lwcda
