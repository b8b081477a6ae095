#include <doctest.h>

#include <cmath>
#include <set>

#include "lwcda/net_topology.hpp"
#include "lwcda/rng.hpp"
#include "test_support.hpp"

using namespace lwcda;

TEST_CASE("grid deployment places nodes at lattice cell centers") {
  const auto topo = deploy_grid(100, {100.0, 100.0});
  REQUIRE(topo.node_count() == 100);
  CHECK(topo.comm_range() == doctest::Approx(std::sqrt(5.0 / 100.0) * 100.0)
                                 .epsilon(1e-12));
  // row-major ids, spacing 10, first center at (5, 5)
  CHECK(topo.position(0).x == doctest::Approx(5.0));
  CHECK(topo.position(0).y == doctest::Approx(5.0));
  CHECK(topo.position(11).x == doctest::Approx(15.0));
  CHECK(topo.position(11).y == doctest::Approx(15.0));
  CHECK(topo.position(99).x == doctest::Approx(95.0));
  CHECK(topo.position(99).y == doctest::Approx(95.0));
  CHECK(topo.sink_position() == Point2{50.0, 50.0});
  CHECK(topo.connected());
}

TEST_CASE("grid deployment of a single node sits at the area center cell") {
  const auto topo = deploy_grid(1, {10.0, 10.0});
  CHECK(topo.position(0) == Point2{5.0, 5.0});
}

TEST_CASE("grid deployment at 625 nodes matches the range formula") {
  const auto topo = deploy_grid(625, {256.0, 256.0});
  CHECK(topo.comm_range() ==
        doctest::Approx(std::sqrt(5.0 / 625.0) * 256.0).epsilon(1e-12));
  // 25 x 25 lattice
  CHECK(topo.position(0).x == doctest::Approx(256.0 / 25.0 / 2.0));
  CHECK(topo.position(624).x == doctest::Approx(256.0 - 256.0 / 25.0 / 2.0));
}

TEST_CASE("grid deployment of 1000 nodes uses the most-square factorization") {
  const auto topo = deploy_grid(1000, {100.0, 100.0});
  REQUIRE(topo.node_count() == 1000);
  // 25 rows x 40 cols
  CHECK(topo.position(39).y == doctest::Approx(topo.position(0).y));
  CHECK(topo.position(40).y > topo.position(39).y);
  CHECK(topo.connected());
}

TEST_CASE("grid deployment rejects a zero node count") {
  CHECK_THROWS_AS(deploy_grid(0, {10.0, 10.0}), std::invalid_argument);
}

TEST_CASE("two random nodes in a tiny area are always linked") {
  // D = sqrt(5/2) * 1 exceeds the area diagonal, so the single edge exists.
  const auto topo = deploy_random(2, {1.0, 1.0}, 7);
  int node_edges = 0;
  for (const auto& nb : topo.neighbors(0)) {
    if (nb.id == 1) ++node_edges;
  }
  CHECK(node_edges == 1);
}

TEST_CASE("random deployment is deterministic in the seed") {
  const auto a = deploy_random(1024, {100.0, 100.0}, 42);
  const auto b = deploy_random(1024, {100.0, 100.0}, 42);
  REQUIRE(a.node_count() == b.node_count());
  for (NodeId v = 0; v < a.node_count(); ++v) {
    CHECK(a.position(v).x == b.position(v).x);  // bit-identical
    CHECK(a.position(v).y == b.position(v).y);
  }
  CHECK(a.edge_count() == b.edge_count());
}

TEST_CASE("random deployment yields a connected graph (BFS oracle)") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto topo = deploy_random(30, {50.0, 50.0}, seed);
    CHECK(topo.comm_range() ==
          doctest::Approx(std::sqrt(5.0 / 30.0) * 50.0).epsilon(1e-12));
    CHECK(test::bfs_connected(topo));
  }
}

TEST_CASE("unit-disc invariant: edge iff distance within range") {
  for (const auto& topo :
       {deploy_grid(100, {100.0, 100.0}),
        deploy_random(150, {80.0, 60.0}, 11),
        deploy_random(200, {100.0, 100.0}, 5)}) {
    for (NodeId a = 0; a < topo.vertex_count(); ++a) {
      for (NodeId b = a + 1; b < topo.vertex_count(); ++b) {
        const bool in_range =
            distance(topo.position(a), topo.position(b)) <= topo.comm_range();
        CHECK(topo.has_edge(a, b) == in_range);
      }
    }
  }
}

TEST_CASE("shortest paths on a three node chain") {
  // Unit spacing, range 1: a path graph 0 - 1 - 2 (sink far off to one side
  // but still reachable through node 2).
  auto topo = NetworkTopology::from_positions(
      {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, {4.0, 1.0}, {3.0, 0.0}, 1.0);
  const auto tree = shortest_paths(topo, 0);
  CHECK(tree.dist[2] == doctest::Approx(2.0));
  CHECK(tree.dist[1] == doctest::Approx(1.0));
  CHECK(tree.dist[topo.sink_id()] == doctest::Approx(3.0));
  const auto path = walk_to_source(tree, 2);
  REQUIRE(path.size() == 3);
  CHECK(path[0] == 2);
  CHECK(path[1] == 1);
  CHECK(path[2] == 0);
}

TEST_CASE("shortest paths from a single node to itself is zero") {
  const auto topo = deploy_grid(1, {10.0, 10.0});
  const auto tree = shortest_paths(topo, 0);
  CHECK(tree.dist[0] == 0.0);
}

TEST_CASE("shortest paths agree with Bellman-Ford") {
  const auto topo = deploy_random(30, {50.0, 50.0}, 99);
  const auto tree = shortest_paths(topo, 4);
  const auto oracle = test::bellman_ford(topo, 4);
  for (NodeId v = 0; v < topo.vertex_count(); ++v) {
    CHECK(tree.dist[v] == doctest::Approx(oracle[v]).epsilon(1e-12));
  }
}

TEST_CASE("slnm chain walks collinear nodes in order") {
  auto topo = NetworkTopology::from_positions(
      {{0.0, 0.0}, {10.0, 0.0}, {20.0, 0.0}}, {30.0, 1.0}, {25.0, 0.0}, 12.0);
  const auto perm = slnm_chain(topo, 0);
  CHECK(perm.apply(0) == 0);
  CHECK(perm.apply(1) == 1);
  CHECK(perm.apply(2) == 2);

  const auto reversed = slnm_chain(topo, 2);
  CHECK(reversed.apply(2) == 0);
  CHECK(reversed.apply(1) == 1);
  CHECK(reversed.apply(0) == 2);
}

TEST_CASE("slnm chain on a single node is the identity") {
  const auto topo = deploy_grid(1, {10.0, 10.0});
  const auto perm = slnm_chain(topo, 0);
  CHECK(perm.apply(0) == 0);
}

TEST_CASE("slnm chain ties break toward the lowest old id") {
  // Nodes 1 and 2 are equidistant from node 0.
  auto topo = NetworkTopology::from_positions(
      {{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}, {4.0, 1.0}, {0.0, 0.5}, 2.5);
  const auto perm = slnm_chain(topo, 0);
  CHECK(perm.apply(1) == 1);
  CHECK(perm.apply(2) == 2);
}

TEST_CASE("slnm chain shortens adjacent-id distances on random layouts") {
  // Mean Euclidean distance between consecutive ids, before and after the
  // chain relabeling, averaged over 100 seeds.
  double original_sum = 0.0;
  double chained_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto topo = deploy_random(30, {50.0, 50.0}, seed);
    auto rng = make_rng(seed, "start");
    std::uniform_int_distribution<int> pick(0, topo.node_count() - 1);
    const auto chained = apply_permutation(topo, slnm_chain(topo, pick(rng)));
    for (NodeId v = 0; v + 1 < topo.node_count(); ++v) {
      original_sum += distance(topo.position(v), topo.position(v + 1));
      chained_sum += distance(chained.position(v), chained.position(v + 1));
    }
  }
  CHECK(chained_sum < original_sum);
}

TEST_CASE("slnm chain output is a bijection and composes") {
  const auto topo = deploy_random(40, {50.0, 50.0}, 3);
  const auto perm = slnm_chain(topo, 17);
  std::set<NodeId> image(perm.new_id_of.begin(), perm.new_id_of.end());
  REQUIRE(static_cast<int>(image.size()) == topo.node_count());
  CHECK(*image.begin() == 0);
  CHECK(*image.rbegin() == topo.node_count() - 1);

  // Applying the permutation twice relabels consistently: the composed map
  // sends old ids through both hops.
  const auto once = apply_permutation(topo, perm);
  const auto second = slnm_chain(once, 0);
  const auto twice = apply_permutation(once, second);
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    const NodeId mid = perm.apply(v);
    CHECK(twice.position(second.apply(mid)).x == topo.position(v).x);
    CHECK(twice.position(second.apply(mid)).y == topo.position(v).y);
  }
}

TEST_CASE("permuted topology preserves geometry and edges") {
  const auto topo = deploy_random(25, {40.0, 40.0}, 8);
  const auto perm = slnm_chain(topo, 0);
  const auto relabeled = apply_permutation(topo, perm);
  CHECK(relabeled.edge_count() == topo.edge_count());
  for (NodeId a = 0; a < topo.node_count(); ++a) {
    for (NodeId b = a + 1; b < topo.node_count(); ++b) {
      CHECK(topo.has_edge(a, b) ==
            relabeled.has_edge(perm.apply(a), perm.apply(b)));
    }
  }
}

TEST_CASE("grid deployment is bit-identical across calls") {
  const auto a = deploy_grid(49, {70.0, 70.0});
  const auto b = deploy_grid(49, {70.0, 70.0});
  for (NodeId v = 0; v < a.node_count(); ++v) {
    CHECK(a.position(v).x == b.position(v).x);
    CHECK(a.position(v).y == b.position(v).y);
  }
}
