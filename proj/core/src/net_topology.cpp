#include "lwcda/net_topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "lwcda/rng.hpp"

namespace lwcda {

double comm_range_for(int n, const Rect& area) {
  return std::sqrt(5.0 / static_cast<double>(n)) * area.max_side();
}

namespace {

// Unit-disc edge construction via spatial hashing: bucket vertices into
// cells of side D and only test the 3x3 neighborhood.
std::vector<std::vector<Neighbor>> build_adjacency(
    const std::vector<Point2>& positions, const Point2& sink, double range,
    int* edge_count) {
  const int n = static_cast<int>(positions.size());
  const int vertices = n + 1;
  auto pos = [&](int v) -> const Point2& { return v == n ? sink : positions[v]; };

  double min_x = sink.x, min_y = sink.y;
  for (const auto& p : positions) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }

  const double cell = range > 0 ? range : 1.0;
  auto cell_of = [&](const Point2& p) {
    return std::pair<long, long>{
        static_cast<long>(std::floor((p.x - min_x) / cell)),
        static_cast<long>(std::floor((p.y - min_y) / cell))};
  };

  std::vector<std::pair<std::pair<long, long>, int>> keyed(vertices);
  for (int v = 0; v < vertices; ++v) keyed[v] = {cell_of(pos(v)), v};
  std::sort(keyed.begin(), keyed.end());

  auto bucket_range = [&](long cx, long cy) {
    const std::pair<std::pair<long, long>, int> lo{{cx, cy},
                                                   std::numeric_limits<int>::min()};
    const std::pair<std::pair<long, long>, int> hi{{cx, cy},
                                                   std::numeric_limits<int>::max()};
    return std::pair{std::lower_bound(keyed.begin(), keyed.end(), lo),
                     std::upper_bound(keyed.begin(), keyed.end(), hi)};
  };

  std::vector<std::vector<Neighbor>> adjacency(vertices);
  int edges = 0;
  for (int v = 0; v < vertices; ++v) {
    const auto [cx, cy] = cell_of(pos(v));
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        auto [it, end] = bucket_range(cx + dx, cy + dy);
        for (; it != end; ++it) {
          const int u = it->second;
          if (u <= v) continue;
          const double d = distance(pos(v), pos(u));
          if (d <= range) {
            adjacency[v].push_back({u, d});
            adjacency[u].push_back({v, d});
            ++edges;
          }
        }
      }
    }
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
  if (edge_count) *edge_count = edges;
  return adjacency;
}

}  // namespace

NetworkTopology NetworkTopology::from_positions(std::vector<Point2> nodes,
                                                Rect area, Point2 sink,
                                                double comm_range) {
  if (nodes.empty()) throw std::invalid_argument("topology needs at least one node");
  if (comm_range <= 0) throw std::invalid_argument("communication range must be positive");
  NetworkTopology topo;
  topo.positions_ = std::move(nodes);
  topo.area_ = area;
  topo.sink_ = sink;
  topo.comm_range_ = comm_range;
  topo.adjacency_ =
      build_adjacency(topo.positions_, topo.sink_, comm_range, &topo.edge_count_);
  return topo;
}

bool NetworkTopology::has_edge(NodeId a, NodeId b) const {
  const auto& list = adjacency_[a];
  return std::any_of(list.begin(), list.end(),
                     [b](const Neighbor& nb) { return nb.id == b; });
}

bool NetworkTopology::connected() const {
  std::vector<char> seen(vertex_count(), 0);
  std::queue<NodeId> frontier;
  frontier.push(sink_id());
  seen[sink_id()] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (const auto& nb : adjacency_[v]) {
      if (!seen[nb.id]) {
        seen[nb.id] = 1;
        ++reached;
        frontier.push(nb.id);
      }
    }
  }
  return reached == vertex_count();
}

namespace {

// Most-square factorization r x c = n with r <= c.
std::pair<int, int> most_square_factors(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r > 1 && n % r != 0) --r;
  return {r, n / r};
}

}  // namespace

NetworkTopology deploy_grid(int n, Rect area, std::optional<Point2> sink) {
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  if (area.width <= 0 || area.height <= 0)
    throw std::invalid_argument("area sides must be positive");

  auto [small, large] = most_square_factors(n);
  // The larger factor runs along the longer side.
  const int cols = area.width >= area.height ? large : small;
  const int rows = n / cols;

  const double dx = area.width / cols;
  const double dy = area.height / rows;
  std::vector<Point2> positions;
  positions.reserve(n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      positions.push_back({(j + 0.5) * dx, (i + 0.5) * dy});
    }
  }
  const Point2 sink_pos = sink.value_or(area.center());
  return NetworkTopology::from_positions(std::move(positions), area, sink_pos,
                                         comm_range_for(n, area));
}

NetworkTopology deploy_random(int n, Rect area, std::uint64_t seed,
                              std::optional<Point2> sink) {
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  if (area.width <= 0 || area.height <= 0)
    throw std::invalid_argument("area sides must be positive");

  const Point2 sink_pos = sink.value_or(area.center());
  const double range = comm_range_for(n, area);
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto rng = make_rng(seed, "topology", static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> ux(0.0, area.width);
    std::uniform_real_distribution<double> uy(0.0, area.height);
    std::vector<Point2> positions(n);
    for (auto& p : positions) {
      p.x = ux(rng);
      p.y = uy(rng);
    }
    NetworkTopology topo = NetworkTopology::from_positions(
        std::move(positions), area, sink_pos, range);
    if (topo.connected()) return topo;
  }
  throw std::runtime_error("random deployment: no connected layout within " +
                           std::to_string(kMaxAttempts) +
                           " attempts for seed " + std::to_string(seed));
}

ShortestPathTree shortest_paths(const NetworkTopology& topo, NodeId source) {
  const int vertices = topo.vertex_count();
  ShortestPathTree tree;
  tree.source = source;
  tree.dist.assign(vertices, std::numeric_limits<double>::infinity());
  tree.parent.assign(vertices, -1);

  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  tree.dist[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > tree.dist[v]) continue;  // stale entry
    for (const auto& nb : topo.neighbors(v)) {
      const double cand = d + nb.length;
      if (cand < tree.dist[nb.id]) {
        tree.dist[nb.id] = cand;
        tree.parent[nb.id] = v;
        queue.push({cand, nb.id});
      }
    }
  }

  for (int v = 0; v < vertices; ++v) {
    if (!std::isfinite(tree.dist[v]))
      throw std::runtime_error("shortest_paths: vertex unreachable; topology violates connectivity invariant");
  }
  return tree;
}

std::vector<NodeId> walk_to_source(const ShortestPathTree& tree, NodeId target) {
  std::vector<NodeId> path;
  for (NodeId v = target; v != -1; v = tree.parent[v]) path.push_back(v);
  return path;
}

SlnmPermutation slnm_chain(const NetworkTopology& topo, NodeId start) {
  const int n = topo.node_count();
  if (start < 0 || start >= n) throw std::invalid_argument("slnm_chain: start out of range");

  std::vector<char> visited(n, 0);
  SlnmPermutation perm;
  perm.new_id_of.assign(n, -1);

  NodeId current = start;
  for (int order = 0; order < n; ++order) {
    visited[current] = 1;
    perm.new_id_of[current] = order;
    if (order + 1 == n) break;
    NodeId best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (NodeId cand = 0; cand < n; ++cand) {
      if (visited[cand]) continue;
      const double d = distance(topo.position(current), topo.position(cand));
      if (d < best_dist) {  // ties keep the lowest candidate id
        best_dist = d;
        best = cand;
      }
    }
    current = best;
  }
  return perm;
}

NetworkTopology apply_permutation(const NetworkTopology& topo,
                                  const SlnmPermutation& perm) {
  const int n = topo.node_count();
  if (perm.size() != n)
    throw std::invalid_argument("permutation size does not match topology");
  std::vector<Point2> positions(n);
  for (NodeId old_id = 0; old_id < n; ++old_id) {
    positions[perm.apply(old_id)] = topo.position(old_id);
  }
  return NetworkTopology::from_positions(std::move(positions), topo.area(),
                                         topo.sink_position(), topo.comm_range());
}

}  // namespace lwcda
