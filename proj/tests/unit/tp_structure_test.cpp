#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tpk/generators.hpp"
#include "tpk/tp_structure.hpp"

using namespace tpk;

TEST_CASE("is_trivially_perfect") {
  CHECK(is_trivially_perfect(Graph(1)));
  CHECK(is_trivially_perfect(Graph(0)));
  CHECK_FALSE(is_trivially_perfect(oracle::cycle(4)));
  CHECK_FALSE(is_trivially_perfect(oracle::path(4)));
  // K3 plus a disjoint star
  CHECK(is_trivially_perfect(Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {3, 6}})));

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = trial % 2 ? oracle::random_recursive_tp(n, rng) : oracle::random_graph(n, 0.5, rng);
    REQUIRE(is_trivially_perfect(g) == !oracle::has_obstruction(g));
  }
}

TEST_CASE("build_ucd examples") {
  const UcdForest k5 = build_ucd(oracle::complete(5));
  REQUIRE(k5.nodes.size() == 1);
  CHECK(k5.nodes[0].bag.size() == 5);

  const UcdForest p3 = build_ucd(oracle::path(3));  // a=0, b=1, c=2
  REQUIRE(p3.roots.size() == 1);
  const UcdNode& root = p3.nodes[p3.roots[0]];
  CHECK(root.bag == std::vector<Vertex>{1});
  REQUIRE(root.children.size() == 2);
  CHECK(p3.nodes[root.children[0]].bag == std::vector<Vertex>{0});
  CHECK(p3.nodes[root.children[1]].bag == std::vector<Vertex>{2});

  const UcdForest two_k2 = build_ucd(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK(two_k2.roots.size() == 2);
  for (NodeId r : two_k2.roots) CHECK(two_k2.nodes[r].bag.size() == 2);

  try {
    build_ucd(oracle::cycle(4));
    FAIL("expected NotTriviallyPerfect");
  } catch (const NotTriviallyPerfect& e) {
    CHECK(e.witness().kind == ObstructionKind::C4);
  }
}

TEST_CASE("ucd_to_graph") {
  UcdForest f;
  f.num_vertices = 4;
  f.nodes = {UcdNode{std::nullopt, {0, 1, 2, 3}, {}}};
  f.roots = {0};
  f.vertex_node = {0, 0, 0, 0};
  CHECK(ucd_to_graph(f) == oracle::complete(4));

  UcdForest p3;
  p3.num_vertices = 3;
  p3.nodes = {UcdNode{std::nullopt, {1}, {1, 2}}, UcdNode{0, {0}, {}}, UcdNode{0, {2}, {}}};
  p3.roots = {0};
  p3.vertex_node = {1, 0, 2};
  CHECK(ucd_to_graph(p3) == oracle::path(3));

  UcdForest bad = p3;
  bad.nodes[0].children = {1};
  bad.nodes[2].parent = std::nullopt;
  bad.roots = {0, 2};
  CHECK_THROWS_AS(ucd_to_graph(bad), UcdError);
}

TEST_CASE("ucd roundtrip and node invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    const Graph g = trial % 2 ? oracle::random_recursive_tp(n, rng) : random_tp_graph(n, rng());
    const UcdForest f = build_ucd(g);
    REQUIRE(ucd_to_graph(f) == g);
    for (NodeId t = 0; t < f.nodes.size(); ++t) {
      CHECK(f.nodes[t].children.size() != 1);
      const auto sub = to_vector(f.subtree_vertices(t));
      CHECK(oracle::universal_vertices(g, sub) == f.nodes[t].bag);
    }
  }
}

TEST_CASE("preceq") {
  const UcdForest p3 = build_ucd(oracle::path(3));
  CHECK(preceq(p3, 1, 0) == Relation::kAncestor);
  CHECK(preceq(p3, 0, 1) == Relation::kDescendant);
  CHECK(preceq(p3, 0, 2) == Relation::kIncomparable);
  const UcdForest k3 = build_ucd(oracle::complete(3));
  CHECK(preceq(k3, 0, 2) == Relation::kSameBag);
  const UcdForest two_k2 = build_ucd(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK(preceq(two_k2, 0, 3) == Relation::kIncomparable);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_recursive_tp(2 + rng() % 20, rng);
    const UcdForest f = build_ucd(g);
    for (Vertex a = 0; a < g.num_vertices(); ++a)
      for (Vertex b = 0; b < g.num_vertices(); ++b)
        if (a != b) CHECK((preceq(f, a, b) != Relation::kIncomparable) == g.adjacent(a, b));
  }
}

TEST_CASE("alpha_tp") {
  CHECK(alpha_tp(oracle::complete(6)).alpha == 1);
  CHECK(alpha_tp(Graph(7)).alpha == 7);
  CHECK(alpha_tp(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})).alpha == 3);
  CHECK_THROWS_AS(alpha_tp(oracle::path(4)), NotTriviallyPerfect);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_recursive_tp(1 + rng() % 16, rng);
    const AlphaResult a = alpha_tp(g);
    REQUIRE(a.alpha == oracle::independence_number(g));
    REQUIRE(a.witness.size() == a.alpha);
    for (Vertex u : a.witness)
      for (Vertex v : a.witness) CHECK_FALSE((u != v && g.adjacent(u, v)));
  }
}

TEST_CASE("is_tp_set_system") {
  CHECK(is_tp_set_system({2, {0b00, 0b01, 0b11}}));
  CHECK_FALSE(is_tp_set_system({2, {0b01, 0b10, 0b11}}));
  CHECK(is_tp_set_system({3, {}}));
  CHECK(is_tp_set_system({3, {0b001, 0b010, 0b100}}));
}
