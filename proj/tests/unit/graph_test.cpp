#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tpk/graph.hpp"

using namespace tpk;

namespace {

bool is_obstruction_of_kind(const Graph& g, const Obstruction& o) {
  const auto& w = o.vertices;
  if (o.kind == ObstructionKind::P4)
    return g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) && g.adjacent(w[2], w[3]) &&
           !g.adjacent(w[0], w[2]) && !g.adjacent(w[1], w[3]) && !g.adjacent(w[0], w[3]);
  return g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) && g.adjacent(w[2], w[3]) &&
         g.adjacent(w[3], w[0]) && !g.adjacent(w[0], w[2]) && !g.adjacent(w[1], w[3]);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.num_edges() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
  g.toggle(Pair::of(2, 1));
  CHECK(g.num_edges() == 1);
  CHECK(Pair::of(3, 1) == Pair{1, 3});
}

TEST_CASE("apply_edits") {
  const Graph c4 = oracle::cycle(4);
  const Graph diamond = apply_edits(c4, {Pair::of(0, 2)});
  CHECK(diamond.num_edges() == 5);
  CHECK(diamond.adjacent(0, 2));
  CHECK(c4.num_edges() == 4);
  CHECK(apply_edits(c4, {}) == c4);
  CHECK_THROWS_AS(apply_edits(c4, {Pair{0, 9}}), GraphError);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    EditSet f;
    for (int i = 0; i < 6; ++i) {
      const Vertex a = rng() % n, b = rng() % n;
      if (a != b) f.insert(Pair::of(a, b));
    }
    const Graph h = apply_edits(g, f);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) CHECK(h.adjacent(u, v) == (g.adjacent(u, v) != f.contains({u, v})));
    CHECK(apply_edits(h, f) == g);
  }
}

TEST_CASE("find_obstruction") {
  const auto c4 = find_obstruction(oracle::cycle(4));
  REQUIRE(c4);
  CHECK(c4->kind == ObstructionKind::C4);
  CHECK_FALSE(find_obstruction(oracle::complete(5)));
  const Graph p5 = oracle::path(5);
  const auto p = find_obstruction(p5);
  REQUIRE(p);
  CHECK(p->kind == ObstructionKind::P4);
  CHECK(is_obstruction_of_kind(p5, *p));
  CHECK(find_obstruction(p5) == p);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = oracle::random_graph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
    const auto o = find_obstruction(g);
    REQUIRE(o.has_value() == oracle::has_obstruction(g));
    if (o) CHECK(is_obstruction_of_kind(g, *o));
  }
}

TEST_CASE("find_obstruction_avoiding") {
  const Graph c4 = oracle::cycle(4);  // 0-1-2-3-0
  const auto w0 = find_obstruction_avoiding(c4, c4.empty_set());
  REQUIRE(w0);
  CHECK(w0->violation == ModulatorViolation::kAtMostOneInside);
  // x1 = 0, y1 = 1, y2 = 2, x2 = 3
  const auto w2 = find_obstruction_avoiding(c4, make_set(4, {0, 3}));
  REQUIRE(w2);
  CHECK(w2->violation == ModulatorViolation::kForbiddenPair);
  CHECK_FALSE(find_obstruction_avoiding(c4, c4.all_vertices()));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) x.set(v);
    const auto w = find_obstruction_avoiding(g, x);
    REQUIRE(w.has_value() == !oracle::is_modulator(g, x));
    if (!w) continue;
    CHECK(is_obstruction_of_kind(g, w->obstruction));
    std::vector<Vertex> in, out;
    for (Vertex v : w->obstruction.vertices) (x.test(v) ? in : out).push_back(v);
    if (w->violation == ModulatorViolation::kAtMostOneInside) {
      CHECK(in.size() <= 1);
    } else {
      REQUIRE(in.size() == 2);
      CHECK(oracle::forbidden_pair_shape(g, in[0], in[1], out[0], out[1]));
    }
  }
}

TEST_CASE("true_twin_classes") {
  CHECK(true_twin_classes(oracle::complete(4)).size() == 1);
  CHECK(true_twin_classes(oracle::cycle(4)).size() == 4);
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(true_twin_classes(star).size() == 4);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = oracle::random_graph(n, 0.6, rng);
    const auto classes = true_twin_classes(g);
    std::vector<int> cls(n, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Vertex v : classes[c]) cls[v] = static_cast<int>(c);
    for (Vertex u = 0; u < n; ++u) {
      REQUIRE(cls[u] >= 0);
      for (Vertex v = 0; v < n; ++v)
        CHECK((cls[u] == cls[v]) == (g.closed_neighborhood(u) == g.closed_neighborhood(v)));
    }
  }
}

TEST_CASE("is_module") {
  const Graph p4 = oracle::path(4);
  CHECK(is_module(p4, make_set(4, {2})));
  CHECK(is_module(p4, p4.all_vertices()));
  CHECK_FALSE(is_module(p4, make_set(4, {0, 1})));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      VertexSet s(n);
      for (Vertex v = 0; v < n; ++v)
        if (m >> v & 1) s.set(v);
      REQUIRE(is_module(g, s) == oracle::is_module_mask(g, m));
    }
  }
}

TEST_CASE("complement_induced") {
  CHECK(complement_induced(oracle::complete(3), make_set(3, {0, 1, 2})).graph.num_edges() == 0);
  const Subgraph c = complement_induced(oracle::cycle(4), make_set(4, {0, 1, 2, 3}));
  CHECK(c.graph.num_edges() == 2);
  CHECK(c.graph.adjacent(0, 2));
  CHECK(c.graph.adjacent(1, 3));
  const Subgraph ad = complement_induced(oracle::path(4), make_set(4, {0, 3}));
  CHECK(ad.graph.num_vertices() == 2);
  CHECK(ad.graph.adjacent(0, 1));
  CHECK(ad.to_parent == std::vector<Vertex>{0, 3});
}

TEST_CASE("remove_vertices renumbers densely") {
  const Graph p5 = oracle::path(5);
  const VertexRemoval r = remove_vertices(p5, make_set(5, {1, 3}));
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.graph.num_edges() == 0);
  CHECK(r.remap[0] == 0u);
  CHECK_FALSE(r.remap[1].has_value());
  CHECK(r.remap[4] == 2u);
}

TEST_CASE("components") {
  const Graph g = Graph::from_edges(6, {{0, 3}, {1, 2}, {2, 5}});
  const auto cs = components(g, g.all_vertices());
  REQUIRE(cs.size() == 3);
  CHECK(to_vector(cs[0]) == std::vector<Vertex>{0, 3});
  CHECK(to_vector(cs[1]) == std::vector<Vertex>{1, 2, 5});
  CHECK(to_vector(cs[2]) == std::vector<Vertex>{4});
}
