// Brute-force reference implementations used only by the tests. None of them
// call into the library algorithms they are compared against.
#ifndef TPK_TESTS_ORACLES_HPP
#define TPK_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tpk/graph.hpp"
#include "tpk/sat_reduction.hpp"

namespace oracle {

using tpk::Graph;
using tpk::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Graph number `code` among the labeled graphs on n vertices, one bit per pair.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.add_edge(u, v);
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(std::size_t n) {
  Graph g = path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Edge count and degree profile of g[w] for a 4-set w: P4 is 3 edges with
/// degrees 1,1,2,2 and C4 is 4 edges with all degrees 2.
inline int shape4(const Graph& g, const std::array<Vertex, 4>& w) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(w[i], w[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  std::sort(deg.begin(), deg.end());
  if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return 1;  // P4
  if (edges == 4 && deg == std::array<int, 4>{2, 2, 2, 2}) return 2;  // C4
  return 0;
}

inline void for_each_obstruction(const Graph& g, const std::function<bool(const std::array<Vertex, 4>&)>& f) {
  const Vertex n = static_cast<Vertex>(g.num_vertices());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> w{a, b, c, d};
          if (shape4(g, w) && !f(w)) return;
        }
}

inline bool has_obstruction(const Graph& g) {
  bool found = false;
  for_each_obstruction(g, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

/// Whether the obstruction w with w cap x = {x1, x2} has the shape
/// x1-y1-y2-x2 (path or cycle).
inline bool forbidden_pair_shape(const Graph& g, Vertex x1, Vertex x2, Vertex y1, Vertex y2) {
  auto shaped = [&](Vertex a, Vertex b) {  // a pairs with y1, b with y2
    return g.adjacent(a, y1) && g.adjacent(y1, y2) && g.adjacent(y2, b) && !g.adjacent(a, y2) &&
           !g.adjacent(b, y1);
  };
  return shaped(x1, x2) || shaped(x2, x1);
}

/// Definition check of a TP-modulator over all 4-subsets.
inline bool is_modulator(const Graph& g, const tpk::VertexSet& x) {
  bool ok = true;
  for_each_obstruction(g, [&](const std::array<Vertex, 4>& w) {
    std::vector<Vertex> in, out;
    for (Vertex v : w) (x.test(v) ? in : out).push_back(v);
    if (in.size() <= 1 || (in.size() == 2 && forbidden_pair_shape(g, in[0], in[1], out[0], out[1]))) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

/// Maximum matching size by exhaustive recursion on the lowest free vertex.
inline std::size_t max_matching_size(const Graph& g, const std::vector<Vertex>& allowed_u = {},
                                     const std::vector<Vertex>& allowed_v = {}) {
  const std::size_t n = g.num_vertices();
  const bool bipartite = !allowed_u.empty() || !allowed_v.empty();
  std::vector<int> side(n, -1);
  for (Vertex a : allowed_u) side[a] = 0;
  for (Vertex b : allowed_v) side[b] = 1;
  auto usable = [&](Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) return false;
    return !bipartite || (side[a] >= 0 && side[b] >= 0 && side[a] != side[b]);
  };
  std::vector<bool> used(n, false);
  std::function<std::size_t(Vertex)> go = [&](Vertex from) -> std::size_t {
    while (from < n && used[from]) ++from;
    if (from >= n) return 0;
    used[from] = true;
    std::size_t best = go(from + 1);  // leave `from` unmatched
    for (Vertex w = from + 1; w < n; ++w)
      if (!used[w] && usable(from, w)) {
        used[w] = true;
        best = std::max(best, 1 + go(from + 1));
        used[w] = false;
      }
    used[from] = false;
    return best;
  };
  return go(0);
}

/// Maximum independent set size over all subsets (n <= ~20).
inline std::size_t independence_number(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1u << v;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool indep = true;
    for (Vertex v = 0; v < n && indep; ++v)
      if ((s >> v & 1) && (adj[v] & s)) indep = false;
    if (indep) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

/// Direct module test on a bitmask of vertices.
inline bool is_module_mask(const Graph& g, std::uint32_t m) {
  const std::size_t n = g.num_vertices();
  for (Vertex w = 0; w < n; ++w) {
    if (m >> w & 1) continue;
    int seen = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!(m >> v & 1)) continue;
      const int a = g.adjacent(v, w) ? 1 : 0;
      if (seen == -1) seen = a;
      if (seen != a) return false;
    }
  }
  return true;
}

inline std::vector<std::uint32_t> all_modules(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < (1u << g.num_vertices()); ++m)
    if (is_module_mask(g, m)) out.push_back(m);
  return out;
}

inline std::uint32_t to_mask(const tpk::VertexSet& s) {
  std::uint32_t m = 0;
  for (auto v = s.find_first(); v != tpk::VertexSet::npos; v = s.find_next(v)) m |= 1u << v;
  return m;
}

inline bool connected_mask(const Graph& g, std::uint32_t m, bool complement) {
  if (m == 0) return true;
  const std::uint32_t start = m & (~m + 1);
  std::uint32_t seen = start, frontier = start;
  while (frontier) {
    std::uint32_t next = 0;
    for (Vertex v = 0; v < 32; ++v) {
      if (!(frontier >> v & 1)) continue;
      for (Vertex w = 0; w < g.num_vertices(); ++w)
        if ((m >> w & 1) && !(seen >> w & 1) && w != v && g.adjacent(v, w) != complement) next |= 1u << w;
    }
    seen |= next;
    frontier = next;
  }
  return seen == m;
}

/// A satisfying assignment by exhaustive search, alpha[0] unused.
inline std::optional<std::vector<bool>> solve_sat(const tpk::CnfFormula& f) {
  const std::size_t n = f.num_vars;
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    std::vector<bool> alpha(n + 1, false);
    for (std::size_t x = 1; x <= n; ++x) alpha[x] = bits >> (x - 1) & 1;
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) any = any || alpha[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return alpha;
  }
  return std::nullopt;
}

/// Every component is a paw (triangle with one pendant) or a cricket
/// (triangle with two pendants on the same vertex), checked by structure.
inline bool paw_cricket_census(const Graph& g, std::size_t* paws = nullptr, std::size_t* crickets = nullptr) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::size_t np = 0, nc = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> members{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex w = 0; w < n; ++w)
        if (comp[w] == -1 && g.adjacent(members[i], w)) {
          comp[w] = static_cast<int>(s);
          members.push_back(w);
        }
    std::vector<Vertex> leaves, rest;
    for (Vertex v : members) (g.degree(v) == 1 ? leaves : rest).push_back(v);
    // The non-pendant part must be a triangle and all pendants hang on one vertex of it.
    if (rest.size() != 3 || leaves.empty() || leaves.size() > 2) return false;
    if (!g.adjacent(rest[0], rest[1]) || !g.adjacent(rest[1], rest[2]) || !g.adjacent(rest[0], rest[2]))
      return false;
    const auto hub = static_cast<Vertex>(g.neighbors(leaves[0]).find_first());
    for (Vertex l : leaves)
      if (!g.adjacent(l, hub)) return false;
    for (Vertex r : rest)
      if (r != hub && g.degree(r) != 2) return false;
    if (g.degree(hub) != 2 + leaves.size()) return false;
    (leaves.size() == 1 ? np : nc) += 1;
  }
  if (paws) *paws = np;
  if (crickets) *crickets = nc;
  return true;
}

/// Trivially perfect graph by the recursive definition: disjoint unions and
/// adding a universal vertex, starting from single vertices.
inline Graph random_recursive_tp(std::size_t n, std::mt19937_64& rng) {
  std::function<std::vector<std::pair<Vertex, Vertex>>(std::vector<Vertex>)> build =
      [&](std::vector<Vertex> vs) -> std::vector<std::pair<Vertex, Vertex>> {
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (vs.size() <= 1) return edges;
    std::uniform_int_distribution<int> op(0, 2);
    if (op(rng) == 0) {  // universal vertex on top of the rest
      const Vertex u = vs.back();
      vs.pop_back();
      for (Vertex v : vs) edges.emplace_back(u, v);
      auto sub = build(vs);
      edges.insert(edges.end(), sub.begin(), sub.end());
    } else {  // disjoint union of two parts
      std::uniform_int_distribution<std::size_t> cut(1, vs.size() - 1);
      const std::size_t c = cut(rng);
      auto a = build({vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(c)});
      auto b = build({vs.begin() + static_cast<std::ptrdiff_t>(c), vs.end()});
      edges.insert(edges.end(), a.begin(), a.end());
      edges.insert(edges.end(), b.begin(), b.end());
    }
    return edges;
  };
  std::vector<Vertex> vs(n);
  for (Vertex v = 0; v < n; ++v) vs[v] = v;
  std::shuffle(vs.begin(), vs.end(), rng);
  Graph g(n);
  for (auto [u, v] : build(vs)) g.add_edge(u, v);
  return g;
}

/// Universal vertices of g[s], by degree count.
inline std::vector<Vertex> universal_vertices(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    std::size_t d = 0;
    for (Vertex w : s)
      if (w != v && g.adjacent(v, w)) ++d;
    if (d + 1 == s.size()) out.push_back(v);
  }
  return out;
}

}  // namespace oracle

#endif  // TPK_TESTS_ORACLES_HPP
