#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tpk/exact_solver.hpp"
#include "tpk/generators.hpp"
#include "tpk/io.hpp"
#include "tpk/sat_reduction.hpp"
#include "tpk/tp_structure.hpp"

using namespace tpk;

namespace {

const Mode kModes[] = {Mode::kEditing, Mode::kDeletion, Mode::kCompletion};

Graph subdivided_claw() {  // center 0, arms 0-1-2, 0-3-4, 0-5-6
  return Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

CnfFormula m2_formula() { return {3, {{1, 2, 3}, {-1, -2, -3}}}; }

}  // namespace

TEST_CASE("solve_branching examples") {
  const Graph c4 = oracle::cycle(4);
  CHECK(solve_branching(c4, 1, Mode::kEditing).feasible());
  CHECK_FALSE(solve_branching(c4, 1, Mode::kDeletion).feasible());
  const SolveResult d2 = solve_branching(c4, 2, Mode::kDeletion);
  REQUIRE(d2.feasible());
  CHECK(is_valid_solution(c4, 2, Mode::kDeletion, *d2.witness));
  CHECK(solve_branching(oracle::path(4), 1, Mode::kDeletion).feasible());
  CHECK_FALSE(solve_branching(c4, 0, Mode::kEditing).feasible());
  const SolveResult guard = solve_branching(oracle::cycle(12), 6, Mode::kEditing, {5});
  CHECK(guard.status == SolveStatus::kResourceExceeded);
}

TEST_CASE("solve_branching witnesses, monotonicity and agreement with enumeration") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(2 + rng() % 7, 0.5, rng);
    for (Mode mode : kModes) {
      bool prev = false;
      for (std::int64_t k = 0; k <= 2; ++k) {
        const SolveResult r = solve_branching(g, k, mode);
        REQUIRE(r.feasible() == solve_bruteforce(g, k, mode).feasible());
        if (r.feasible()) CHECK(is_valid_solution(g, k, mode, *r.witness));
        if (prev) CHECK(r.feasible());
        prev = r.feasible();
      }
    }
  }
}

TEST_CASE("solve_bruteforce and optimal_editsets") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_recursive_tp(1 + rng() % 10, rng);
    for (Mode mode : kModes) {
      const SolveResult r = solve_bruteforce(g, 0, mode);
      REQUIRE(r.feasible());
      CHECK(r.witness->empty());
    }
  }
  const Graph c6 = oracle::cycle(6);
  CHECK_FALSE(solve_bruteforce(c6, 1, Mode::kEditing).feasible());
  const SolveResult c6r = solve_bruteforce(c6, 2, Mode::kEditing);
  REQUIRE(c6r.feasible());
  CHECK(c6r.witness->size() == 2);
  CHECK(optimal_editsets(oracle::complete(3), 2, Mode::kEditing) == std::vector<EditSet>{EditSet{}});
  CHECK(optimal_editsets(c6, 1, Mode::kEditing).empty());
  CHECK_THROWS_AS(solve_bruteforce(oracle::cycle(12), 6, Mode::kEditing, {1000}), EnumerationTooLarge);

  const auto claw = optimal_editsets(subdivided_claw(), 2, Mode::kEditing);
  CHECK(claw.size() == 3);
  for (const EditSet& f : claw) {
    CHECK(f.size() == 2);
    for (const Pair& p : f) CHECK(p.u == 0);
  }
}

TEST_CASE("normalize") {
  const CnfFormula ok = m2_formula();
  CHECK(normalize(ok) == ok);
  const CnfFormula once{3, {{1, 2, 3}}};
  const CnfFormula dup = normalize(once);
  CHECK(dup.clauses.size() == 2);
  CHECK(is_normalized(dup));
  CHECK_THROWS_AS(normalize({2, {{1, 1, 2}}}), UnsupportedFormula);
  CHECK_THROWS_AS(normalize({3, {{1, -1, 2}}}), UnsupportedFormula);
  CHECK_THROWS_AS(normalize({2, {{1, 2, 3}}}), UnsupportedFormula);
}

TEST_CASE("reduce") {
  const TpeInstance inst = reduce(m2_formula());
  CHECK(inst.g.num_vertices() == 26);
  CHECK(inst.g.num_edges() == 36);
  CHECK(inst.k == 10);
  CHECK(inst.g.max_degree() == 4);
  CHECK(verify_instance(inst).ok);
  for (Vertex c : inst.clause_vertex) CHECK(inst.g.degree(c) == 3);
  for (const auto& [x, slots] : inst.slots) {
    for (const auto& s : slots) CHECK(inst.g.degree(s.paw) == 2);
    // The variable part is a cycle on 3p vertices plus p paw vertices.
    VertexSet cyc(inst.g.num_vertices());
    for (const auto& s : slots) cyc |= make_set(inst.g.num_vertices(), {s.bot, s.top, s.dia});
    const Graph sub = induced_subgraph(inst.g, cyc).graph;
    CHECK(sub.num_edges() == 3 * slots.size());
    for (Vertex v = 0; v < sub.num_vertices(); ++v) CHECK(sub.degree(v) == 2);
    CHECK(components(sub, sub.all_vertices()).size() == 1);
  }
  CHECK(inst.g.label(inst.slots.at(1)[0].bot) == "bot[x1,0]");
  CHECK(inst.g.label(inst.clause_vertex[1]) == "clause[c1]");
  CHECK_THROWS_AS(reduce({3, {{1, 2, 3}}}), std::invalid_argument);

  TpeInstance broken = inst;
  broken.g.add_edge(inst.clause_vertex[0], inst.clause_vertex[1]);
  const VerifyReport bad = verify_instance(broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.first_violation.find("edge count") != std::string::npos);

  const TpeInstance m3 = reduce(normalize({4, {{1, 2, 3}, {-1, 2, 4}, {-3, -4, 1}}}));
  if (m3.formula.clauses.size() == 3) {
    CHECK(m3.g.num_vertices() == 39);
    CHECK(m3.g.num_edges() == 54);
    CHECK(m3.k == 15);
  }
}

TEST_CASE("assignment_editset") {
  const TpeInstance inst = reduce(m2_formula());
  const std::vector<bool> alpha{false, true, false, false};
  const EditSet f = assignment_editset(inst, alpha);
  CHECK(f.size() == 10);
  for (const Pair& p : f) CHECK(inst.g.adjacent(p.u, p.v));
  const Graph h = apply_edits(inst.g, f);
  CHECK(is_trivially_perfect(h));
  CHECK(only_paws_and_crickets(h));
  CHECK(oracle::paw_cricket_census(h));
  CHECK_THROWS_AS(assignment_editset(inst, {false, false, false, false}), std::invalid_argument);
  CHECK_FALSE(only_paws_and_crickets(oracle::cycle(4)));
}

TEST_CASE("graph file format") {
  const std::string text = "# square\np tpg 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\nl 2 corner\n";
  const Graph g = parse_graph(text);
  CHECK(g.num_edges() == 4);
  CHECK(g.label(2) == "corner");
  const auto o = find_obstruction(g);
  REQUIRE(o);
  CHECK(o->kind == ObstructionKind::C4);
  CHECK(parse_graph(write_graph(g)) == g);
  CHECK(write_graph(parse_graph(write_graph(g))) == write_graph(g));

  auto error_line = [](const std::string& s) -> std::size_t {
    try {
      parse_graph(s);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("p tpg 2 1\ne 0 0\n") == 2);
  CHECK(error_line("p tpg 2 2\ne 0 1\ne 1 0\n") == 3);
  CHECK(error_line("p tpg 2 1\ne 0 2\n") == 2);
  CHECK(error_line("e 0 1\n") == 1);
  CHECK(error_line("p tpg 3 2\ne 0 1\n") > 0);
  CHECK(error_line("p tpg 3 0\nq 1\n") == 2);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph r = oracle::random_graph(rng() % 20, 0.3, rng);
    CHECK(parse_graph(write_graph(r)) == r);
  }
}

TEST_CASE("dimacs format") {
  const CnfFormula one = parse_dimacs_cnf("p cnf 3 1 \n 1 2 3 0");
  CHECK(one == CnfFormula{3, {{1, 2, 3}}});
  CHECK(parse_dimacs_cnf("c two clauses\np cnf 3 2 \n 1 2 3 0 \n -1 -2 -3 0") == m2_formula());
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), ParseError);
  CHECK(parse_dimacs_cnf(write_dimacs_cnf(m2_formula())) == m2_formula());
}

TEST_CASE("edit sets and traces roundtrip") {
  const EditSet f{{0, 3}, {1, 2}};
  CHECK(parse_editset(write_editset(f)) == f);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Mode mode = kModes[trial % 3];
    const Instance inst = gen_planted(5 + rng() % 40, rng() % 4, rng(), mode).instance;
    const KernelOutcome out = kernelize(inst, mode);
    const ReductionTrace back = parse_trace(write_trace(out.trace));
    CHECK(write_trace(back) == write_trace(out.trace));
    const Instance again = replay(inst, back);
    CHECK(again.g == out.instance.g);
  }
  CHECK_THROWS_AS(parse_trace("step 1 rule=R9 k=1->1 witness=vertex:0 removed=0\n"), ParseError);
}

TEST_CASE("run report") {
  const Instance inst{oracle::cycle(4), 0};
  const KernelOutcome out = kernelize(inst, Mode::kEditing);
  const std::string json = report_to_json(make_report(inst, Mode::kEditing, out, 0.5));
  CHECK(json.find("\"outcome\": \"no-instance\"") != std::string::npos);
  CHECK(json.find("\"R1\": 1") != std::string::npos);
}

TEST_CASE("gen_planted") {
  for (Mode mode : kModes) {
    for (std::uint64_t seed = 0; seed < 70; ++seed) {
      const std::size_t n = 1 + seed % 40, k = seed % 4;
      const PlantedInstance p = gen_planted(n, k, seed, mode);
      CHECK(is_trivially_perfect(gen_planted(n, 0, seed, mode).instance.g));
      CHECK(p.instance.g == gen_planted(n, k, seed, mode).instance.g);
      CHECK(p.planted.size() <= k);
      CHECK(is_valid_solution(p.instance.g, static_cast<std::int64_t>(k), mode, p.planted));
      CHECK(solve_branching(p.instance.g, static_cast<std::int64_t>(k), mode).feasible());
    }
  }
}
