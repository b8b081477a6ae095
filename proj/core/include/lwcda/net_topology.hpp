#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lwcda/geometry.hpp"

namespace lwcda {

/// Sensor nodes carry dense ids 0..N-1; the sink is vertex N.
using NodeId = int;

struct Neighbor {
  NodeId id;
  double length;  // Euclidean, meters
};

/// Unit-disc connectivity graph over a node deployment plus the sink.
/// An edge (i, j) exists iff the Euclidean distance is <= the communication
/// range D = sqrt(5/N) * max(area side).
class NetworkTopology {
 public:
  static NetworkTopology from_positions(std::vector<Point2> nodes, Rect area,
                                        Point2 sink, double comm_range);

  int node_count() const { return static_cast<int>(positions_.size()); }
  NodeId sink_id() const { return node_count(); }
  int vertex_count() const { return node_count() + 1; }

  /// Position of any vertex, the sink included.
  const Point2& position(NodeId v) const {
    return v == sink_id() ? sink_ : positions_[v];
  }
  const std::vector<Point2>& node_positions() const { return positions_; }
  Point2 sink_position() const { return sink_; }
  const Rect& area() const { return area_; }
  double comm_range() const { return comm_range_; }

  const std::vector<Neighbor>& neighbors(NodeId v) const { return adjacency_[v]; }
  bool has_edge(NodeId a, NodeId b) const;
  int edge_count() const { return edge_count_; }

  /// True when the graph including the sink is one component.
  bool connected() const;

 private:
  std::vector<Point2> positions_;
  Rect area_;
  Point2 sink_;
  double comm_range_ = 0.0;
  std::vector<std::vector<Neighbor>> adjacency_;  // size N+1, sink last
  int edge_count_ = 0;
};

/// Communication range D = sqrt(5/N) * a with a the longest area side.
double comm_range_for(int n, const Rect& area);

/// Lattice deployment at cell centers of the most-square r x c factorization
/// of n; ids run row-major. The sink defaults to the area center.
NetworkTopology deploy_grid(int n, Rect area, std::optional<Point2> sink = {});

/// Uniform i.i.d. deployment; the whole layout is resampled until the graph
/// including the sink is connected (at most 100 attempts).
NetworkTopology deploy_random(int n, Rect area, std::uint64_t seed,
                              std::optional<Point2> sink = {});

struct ShortestPathTree {
  NodeId source;
  std::vector<double> dist;     // size vertex_count()
  std::vector<NodeId> parent;   // -1 at the source
};

/// Exact single-source Dijkstra with Euclidean edge weights over all
/// vertices, the sink included.
ShortestPathTree shortest_paths(const NetworkTopology& topo, NodeId source);

/// Vertex sequence target -> ... -> source read off the parent pointers.
std::vector<NodeId> walk_to_source(const ShortestPathTree& tree, NodeId target);

/// Bijection old node id -> new node id (chain visit order).
struct SlnmPermutation {
  std::vector<NodeId> new_id_of;

  NodeId apply(NodeId old_id) const { return new_id_of[old_id]; }
  int size() const { return static_cast<int>(new_id_of.size()); }
};

/// Greedy nearest-neighbor chain: starting from `start`, repeatedly hop to
/// the Euclidean-nearest unvisited node (ties to the lowest old id); new ids
/// are assigned in visit order. Adjacent new ids then tend to be
/// geographically close, which makes sampled fields smooth in id order.
SlnmPermutation slnm_chain(const NetworkTopology& topo, NodeId start);

/// Relabel node ids through the permutation; geometry and edges are
/// unchanged, only the id assignment moves.
NetworkTopology apply_permutation(const NetworkTopology& topo,
                                  const SlnmPermutation& perm);

}  // namespace lwcda
