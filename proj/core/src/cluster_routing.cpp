#include "lwcda/cluster_routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "lwcda/rng.hpp"

namespace lwcda {

std::vector<std::vector<NodeId>> ClusterAssignment::members_by_cluster() const {
  std::vector<std::vector<NodeId>> members(cluster_count());
  for (NodeId v = 0; v < node_count(); ++v) members[member_of[v]].push_back(v);
  return members;  // ascending by construction
}

long TrafficLedger::packets_on(NodeId from, NodeId to) const {
  const auto it = links.find({from, to});
  return it == links.end() ? 0 : it->second.packets;
}

long TrafficLedger::total_packets() const {
  long total = 0;
  for (const auto& [link, traffic] : links) total += traffic.packets;
  return total;
}

std::vector<NodeId> select_cluster_heads(const NetworkTopology& topo,
                                         double t_hr, std::uint64_t seed) {
  if (!(t_hr > 0.0 && t_hr <= 1.0))
    throw std::invalid_argument("CH threshold must lie in (0, 1]");

  constexpr int kMaxRedraws = 100;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    auto rng = make_rng(seed, "ch-election", static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<NodeId> heads;
    for (NodeId v = 0; v < topo.node_count(); ++v) {
      if (uniform(rng) <= t_hr) heads.push_back(v);
    }
    if (!heads.empty()) return heads;
  }
  throw std::runtime_error("CH election produced zero heads in 100 redraws");
}

std::vector<NodeId> select_cluster_heads_exact(const NetworkTopology& topo,
                                               int m, std::uint64_t seed) {
  const int n = topo.node_count();
  if (m < 1 || m > n) throw std::invalid_argument("CH count out of range");

  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  auto rng = make_rng(seed, "ch-subset");
  // Partial Fisher-Yates: only the first m entries are needed.
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(ids[i], ids[pick(rng)]);
  }
  ids.resize(m);
  std::sort(ids.begin(), ids.end());
  return ids;
}

ClusterAssignment assign_leaves(const NetworkTopology& topo,
                                const std::vector<NodeId>& ch_set) {
  if (ch_set.empty()) throw std::invalid_argument("cluster head set is empty");
  const int n = topo.node_count();

  std::vector<NodeId> heads = ch_set;
  std::sort(heads.begin(), heads.end());
  std::vector<int> cluster_of_head(n, -1);
  for (int j = 0; j < static_cast<int>(heads.size()); ++j) {
    if (heads[j] < 0 || heads[j] >= n)
      throw std::invalid_argument("cluster head id out of range");
    if (cluster_of_head[heads[j]] != -1)
      throw std::invalid_argument("duplicate cluster head id");
    cluster_of_head[heads[j]] = j;
  }

  // Multi-source Dijkstra over the sensor-only graph with lexicographic
  // (distance, CH id) labels, so equal-distance leaves join the lowest CH.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<NodeId> head_of(n, std::numeric_limits<NodeId>::max());
  std::vector<NodeId> parent(n, -1);

  using Entry = std::tuple<double, NodeId, NodeId>;  // dist, head, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (const NodeId h : heads) {
    dist[h] = 0.0;
    head_of[h] = h;
    queue.push({0.0, h, h});
  }
  auto better = [](double d, NodeId h, double cur_d, NodeId cur_h) {
    return d < cur_d || (d == cur_d && h < cur_h);
  };
  while (!queue.empty()) {
    const auto [d, h, v] = queue.top();
    queue.pop();
    if (d != dist[v] || h != head_of[v]) continue;  // stale
    for (const auto& nb : topo.neighbors(v)) {
      if (nb.id == topo.sink_id()) continue;  // the sink never relays leaf data
      const double cand = d + nb.length;
      if (better(cand, h, dist[nb.id], head_of[nb.id])) {
        dist[nb.id] = cand;
        head_of[nb.id] = h;
        parent[nb.id] = v;
        queue.push({cand, h, nb.id});
      }
    }
  }

  ClusterAssignment assignment;
  assignment.cluster_heads = heads;
  assignment.member_of.assign(n, -1);
  assignment.leaf_paths.assign(n, {});
  for (NodeId v = 0; v < n; ++v) {
    if (head_of[v] == std::numeric_limits<NodeId>::max())
      throw std::runtime_error("leaf cannot reach any cluster head");
    assignment.member_of[v] = cluster_of_head[head_of[v]];
    if (cluster_of_head[v] == -1) {
      std::vector<NodeId> path;
      for (NodeId u = v; u != -1; u = parent[u]) path.push_back(u);
      assignment.leaf_paths[v] = std::move(path);
    }
  }
  return assignment;
}

ChTree build_ch_mst(const NetworkTopology& topo,
                    const std::vector<NodeId>& ch_set) {
  if (ch_set.empty()) throw std::invalid_argument("cluster head set is empty");

  std::vector<NodeId> heads = ch_set;
  std::sort(heads.begin(), heads.end());
  std::vector<NodeId> vertices = heads;
  vertices.push_back(topo.sink_id());
  const int m = static_cast<int>(vertices.size());

  // One Dijkstra per vertex gives the pairwise metric and the realized routes.
  std::vector<ShortestPathTree> trees;
  trees.reserve(m);
  for (const NodeId v : vertices) trees.push_back(shortest_paths(topo, v));

  struct Candidate {
    double weight;
    int a, b;  // indices into `vertices`, a < b
  };
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      candidates.push_back({trees[a].dist[vertices[b]], a, b});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [&](const Candidate& x,
                                                      const Candidate& y) {
    return std::tie(x.weight, vertices[x.a], vertices[x.b]) <
           std::tie(y.weight, vertices[y.a], vertices[y.b]);
  });

  std::vector<int> dsu(m);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int v) {
    while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
    return v;
  };

  struct PickedEdge {
    int a, b;
    double weight;
  };
  std::vector<PickedEdge> picked;
  for (const auto& cand : candidates) {
    const int ra = find(cand.a), rb = find(cand.b);
    if (ra == rb) continue;
    dsu[ra] = rb;
    picked.push_back({cand.a, cand.b, cand.weight});
    if (static_cast<int>(picked.size()) == m - 1) break;
  }
  if (static_cast<int>(picked.size()) != m - 1)
    throw std::runtime_error("CH MST: graph not connected");

  // Root the tree at the sink to orient each edge child -> parent.
  std::vector<std::vector<std::pair<int, double>>> tree_adj(m);
  for (const auto& e : picked) {
    tree_adj[e.a].push_back({e.b, e.weight});
    tree_adj[e.b].push_back({e.a, e.weight});
  }
  const int sink_index = m - 1;
  std::vector<int> order{sink_index};
  std::vector<int> tree_parent(m, -1);
  std::vector<char> seen(m, 0);
  seen[sink_index] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (const auto& [u, w] : tree_adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        tree_parent[u] = v;
        order.push_back(u);
      }
    }
  }

  ChTree result;
  for (int v = 0; v < m; ++v) {
    if (v == sink_index) continue;
    const int p = tree_parent[v];
    ChTree::Edge edge;
    edge.child = vertices[v];
    edge.parent = vertices[p];
    edge.weight = trees[v].dist[vertices[p]];
    // walk_to_source on the child's tree yields parent -> ... -> child.
    auto route = walk_to_source(trees[v], vertices[p]);
    std::reverse(route.begin(), route.end());
    edge.path = std::move(route);  // child -> ... -> parent
    result.edges.push_back(std::move(edge));
  }
  std::sort(result.edges.begin(), result.edges.end(),
            [](const ChTree::Edge& x, const ChTree::Edge& y) {
              return x.child < y.child;
            });
  return result;
}

TrafficLedger schedule_traffic(const ClusterAssignment& assignment,
                               const ChTree& tree, Cycle cycle) {
  TrafficLedger ledger;

  // Leaf uplink: one packet per hop, no aggregation between leaves.
  for (NodeId v = 0; v < assignment.node_count(); ++v) {
    const auto& path = assignment.leaf_paths[v];
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto& traffic = ledger.links[{path[i], path[i + 1]}];
      traffic.packets += 1;
      traffic.payload_octets += kMeasurementOctets;
    }
  }

  // CH transport along the MST: accumulate subtree payload bottom-up and
  // re-pack into capacity-sized packets at every tree hop.
  const auto members = assignment.members_by_cluster();
  std::map<NodeId, int> cluster_of_head;
  for (int j = 0; j < assignment.cluster_count(); ++j)
    cluster_of_head[assignment.cluster_heads[j]] = j;

  // Octets emitted by each CH toward its parent: its own cluster payload
  // plus everything relayed from descendant CHs.
  std::map<NodeId, long> subtree_octets;
  for (const auto& edge : tree.edges) {
    long octets = kMeasurementOctets;
    if (cycle == Cycle::Bootstrap) {
      octets += kAlphaRecordOctets *
                static_cast<long>(members[cluster_of_head.at(edge.child)].size());
    }
    subtree_octets[edge.child] = octets;
  }
  // Children sorted by id come before parents only in special cases, so
  // propagate bottom-up by repeated relaxation over the child -> parent
  // relation (edge count passes suffice; the tree has no cycles).
  {
    std::map<NodeId, NodeId> parent_of;
    for (const auto& edge : tree.edges) parent_of[edge.child] = edge.parent;
    // Topological order: process nodes in decreasing depth.
    std::map<NodeId, int> depth;
    for (const auto& edge : tree.edges) {
      int d = 0;
      NodeId v = edge.child;
      while (true) {
        const auto it = parent_of.find(v);
        if (it == parent_of.end()) break;
        v = it->second;
        ++d;
      }
      depth[edge.child] = d;
    }
    std::vector<NodeId> order;
    order.reserve(tree.edges.size());
    for (const auto& edge : tree.edges) order.push_back(edge.child);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return depth[a] > depth[b];
    });
    for (const NodeId child : order) {
      const NodeId parent = parent_of.at(child);
      if (subtree_octets.count(parent)) {  // the sink has no entry
        subtree_octets[parent] += subtree_octets.at(child);
      }
    }
  }

  for (const auto& edge : tree.edges) {
    const long octets = subtree_octets.at(edge.child);
    const long packets =
        (octets + kPayloadCapacityOctets - 1) / kPayloadCapacityOctets;
    for (std::size_t i = 0; i + 1 < edge.path.size(); ++i) {
      auto& traffic = ledger.links[{edge.path[i], edge.path[i + 1]}];
      traffic.packets += packets;
      traffic.payload_octets += octets;
    }
  }
  return ledger;
}

}  // namespace lwcda
