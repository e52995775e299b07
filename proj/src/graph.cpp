#include "tpk/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tpk {

Pair Pair::of(Vertex a, Vertex b) {
  if (a == b) throw GraphError("pair with equal endpoints: " + std::to_string(a));
  return a < b ? Pair{a, b} : Pair{b, a};
}

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Pair>& edges) {
  Graph g(n);
  for (const Pair& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices())
    throw GraphError("invalid pair (" + std::to_string(u) + ", " + std::to_string(v) +
                     "): vertex out of range for n=" + std::to_string(num_vertices()));
  if (u == v) throw GraphError("invalid pair: self-loop at " + std::to_string(u));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_pair(u, v);
  return adj_[u].test(v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++num_edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!adj_[u].test(v)) return;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --num_edges_;
}

void Graph::toggle(Pair p) {
  if (adjacent(p.u, p.v))
    remove_edge(p.u, p.v);
  else
    add_edge(p.u, p.v);
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = adj_.at(v);
  s.set(v);
  return s;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adj_) best = std::max(best, row.count());
  return best;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(num_vertices());
  s.set();
  return s;
}

std::vector<Pair> Graph::edges() const {
  std::vector<Pair> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.push_back({u, static_cast<Vertex>(v)});
  return out;
}

const std::string& Graph::label(Vertex v) const {
  static const std::string kEmpty;
  if (v >= num_vertices()) throw GraphError("label of out-of-range vertex " + std::to_string(v));
  return labels_.empty() ? kEmpty : labels_[v];
}

void Graph::set_label(Vertex v, std::string text) {
  if (v >= num_vertices()) throw GraphError("label of out-of-range vertex " + std::to_string(v));
  if (labels_.empty()) labels_.resize(num_vertices());
  labels_[v] = std::move(text);
}

bool Graph::operator==(const Graph& other) const {
  if (adj_ != other.adj_) return false;
  if (labels_.empty() && other.labels_.empty()) return true;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (label(v) != other.label(v)) return false;
  return true;
}

VertexSet make_set(std::size_t n, std::initializer_list<Vertex> members) {
  return make_set(n, std::vector<Vertex>(members));
}

VertexSet make_set(std::size_t n, const std::vector<Vertex>& members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v >= n) throw GraphError("set member out of range: " + std::to_string(v));
    s.set(v);
  }
  return s;
}

std::vector<Vertex> to_vector(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph out;
  out.to_parent = to_vector(s);
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> to_child(n, 0);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) to_child[out.to_parent[i]] = i;
  out.graph = Graph(out.to_parent.size());
  for (Vertex i = 0; i < out.to_parent.size(); ++i) {
    VertexSet nb = g.neighbors(out.to_parent[i]) & s;
    for (auto w = nb.find_next(out.to_parent[i]); w != VertexSet::npos; w = nb.find_next(w))
      out.graph.add_edge(i, to_child[w]);
    if (g.has_labels()) out.graph.set_label(i, g.label(out.to_parent[i]));
  }
  return out;
}

std::vector<std::optional<Vertex>> removal_remap(std::size_t n, const VertexSet& removed) {
  std::vector<std::optional<Vertex>> remap(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!removed.test(v)) remap[v] = next++;
  return remap;
}

VertexRemoval remove_vertices(const Graph& g, const VertexSet& s) {
  VertexSet keep = g.all_vertices() - s;
  return {induced_subgraph(g, keep).graph, removal_remap(g.num_vertices(), s)};
}

Graph apply_edits(const Graph& g, const EditSet& f) {
  Graph out = g;
  for (const Pair& p : f) out.toggle(p);
  return out;
}

std::optional<Obstruction> as_obstruction(const Graph& g, std::array<Vertex, 4> w) {
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(w[i], w[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
  auto next_unused = [&](Vertex cur, Vertex prev, const std::array<bool, 4>& used) -> int {
    for (int j = 0; j < 4; ++j)
      if (!used[j] && w[j] != prev && g.adjacent(cur, w[j])) return j;
    return -1;
  };
  auto walk = [&](int start) {
    Obstruction o;
    std::array<bool, 4> used{};
    o.vertices[0] = w[start];
    used[start] = true;
    for (int step = 1; step < 4; ++step) {
      int j = next_unused(o.vertices[step - 1], o.vertices[step - 1], used);
      o.vertices[step] = w[j];
      used[j] = true;
    }
    return o;
  };
  if (edges == 3) {
    // P4 iff degree sequence is 1,1,2,2 (the other 3-edge graphs are K3+K1 and K1,3).
    int ones = 0, twos = 0;
    for (int d : deg) {
      ones += d == 1;
      twos += d == 2;
    }
    if (ones != 2 || twos != 2) return std::nullopt;
    int start = static_cast<int>(std::find(deg, deg + 4, 1) - deg);
    Obstruction o = walk(start);
    o.kind = ObstructionKind::P4;
    return o;
  }
  if (edges == 4 && std::all_of(deg, deg + 4, [](int d) { return d == 2; })) {
    int start = static_cast<int>(std::min_element(w.begin(), w.end()) - w.begin());
    Obstruction o = walk(start);
    o.kind = ObstructionKind::C4;
    return o;
  }
  return std::nullopt;
}

namespace {

// a in N[u] \ N[v], b in N[v] \ N[u], uv an edge: a-u-v-b is a P4, or a C4 when ab is an edge.
Obstruction from_non_nested_edge(const Graph& g, Vertex a, Vertex u, Vertex v, Vertex b) {
  Obstruction o;
  o.vertices = {a, u, v, b};
  o.kind = g.adjacent(a, b) ? ObstructionKind::C4 : ObstructionKind::P4;
  return o;
}

// Witness for edge uv inside `scope` whose closed neighborhoods (restricted to scope) are not
// nested. Only the lower-degree direction has to be checked.
std::optional<Obstruction> non_nested(const Graph& g, const VertexSet& scope, Vertex u, Vertex v,
                                      std::size_t deg_u, std::size_t deg_v) {
  if (deg_u > deg_v) std::swap(u, v);
  VertexSet nu = g.neighbors(u) & scope;
  nu.reset(v);
  VertexSet nv = g.neighbors(v) & scope;
  nv.reset(u);
  if (nu.is_subset_of(nv)) return std::nullopt;
  auto a = (nu - nv).find_first();
  auto b = (nv - nu).find_first();
  return from_non_nested_edge(g, static_cast<Vertex>(a), u, v, static_cast<Vertex>(b));
}

std::optional<Obstruction> find_in_scope(const Graph& g, const VertexSet& scope) {
  std::vector<std::size_t> deg(g.num_vertices(), 0);
  for (auto v = scope.find_first(); v != VertexSet::npos; v = scope.find_next(v))
    deg[v] = (g.neighbors(static_cast<Vertex>(v)) & scope).count();
  for (auto u = scope.find_first(); u != VertexSet::npos; u = scope.find_next(u)) {
    VertexSet nb = g.neighbors(static_cast<Vertex>(u)) & scope;
    for (auto v = nb.find_next(u); v != VertexSet::npos; v = nb.find_next(v))
      if (auto o = non_nested(g, scope, static_cast<Vertex>(u), static_cast<Vertex>(v), deg[u],
                              deg[v]))
        return o;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Obstruction> find_obstruction(const Graph& g) {
  return find_in_scope(g, g.all_vertices());
}

std::optional<ModulatorWitness> find_obstruction_avoiding(const Graph& g, const VertexSet& x) {
  const std::size_t n = g.num_vertices();
  const VertexSet rest = g.all_vertices() - x;
  if (auto o = find_in_scope(g, rest)) return ModulatorWitness{*o, ModulatorViolation::kAtMostOneInside};

  std::vector<std::size_t> deg(n, 0);
  for (auto v = rest.find_first(); v != VertexSet::npos; v = rest.find_next(v))
    deg[v] = (g.neighbors(static_cast<Vertex>(v)) & rest).count();

  const std::vector<Vertex> xs = to_vector(x);
  std::vector<VertexSet> ux(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ux[i] = g.neighbors(xs[i]) & rest;

  // Exactly one vertex inside X: G - X is TP, so only edges at x and edges leaving U_x can
  // lose nestedness once x is added back.
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vertex xv = xs[i];
    const VertexSet& u_x = ux[i];
    VertexSet scope = rest;
    scope.set(xv);
    for (auto u = u_x.find_first(); u != VertexSet::npos; u = u_x.find_next(u)) {
      const Vertex uv = static_cast<Vertex>(u);
      if (auto o = non_nested(g, scope, xv, uv, u_x.count(), deg[u] + 1))
        return ModulatorWitness{*o, ModulatorViolation::kAtMostOneInside};
      VertexSet outside = (g.neighbors(uv) & rest) - u_x;
      for (auto v = outside.find_first(); v != VertexSet::npos; v = outside.find_next(v)) {
        if (deg[v] <= deg[u]) continue;
        VertexSet nv = g.neighbors(static_cast<Vertex>(v)) & rest;
        nv.reset(uv);
        VertexSet nu = g.neighbors(uv) & rest;
        nu.reset(static_cast<Vertex>(v));
        auto b = (nv - nu).find_first();
        return ModulatorWitness{
            from_non_nested_edge(g, xv, uv, static_cast<Vertex>(v), static_cast<Vertex>(b)),
            ModulatorViolation::kAtMostOneInside};
      }
    }
  }

  // Two vertices inside X in a forbidden shape x1-y1-y2-x2 (closed to a C4 by x1x2 or not).
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      VertexSet only_i = ux[i] - ux[j];
      VertexSet only_j = ux[j] - ux[i];
      if (only_i.none() || only_j.none()) continue;
      for (auto y1 = only_i.find_first(); y1 != VertexSet::npos; y1 = only_i.find_next(y1)) {
        auto y2 = (g.neighbors(static_cast<Vertex>(y1)) & only_j).find_first();
        if (y2 == VertexSet::npos) continue;
        Obstruction o;
        o.vertices = {xs[i], static_cast<Vertex>(y1), static_cast<Vertex>(y2), xs[j]};
        o.kind = g.adjacent(xs[i], xs[j]) ? ObstructionKind::C4 : ObstructionKind::P4;
        return ModulatorWitness{o, ModulatorViolation::kForbiddenPair};
      }
    }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g) {
  std::map<VertexSet, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto [it, fresh] = index.emplace(g.closed_neighborhood(v), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

bool is_module(const Graph& g, const VertexSet& m) {
  auto first = m.find_first();
  if (first == VertexSet::npos) return true;
  const VertexSet reference = g.neighbors(static_cast<Vertex>(first)) - m;
  for (auto v = m.find_next(first); v != VertexSet::npos; v = m.find_next(v))
    if ((g.neighbors(static_cast<Vertex>(v)) - m) != reference) return false;
  return true;
}

Subgraph complement_induced(const Graph& g, const VertexSet& s) {
  Subgraph out = induced_subgraph(g, s);
  Graph comp(out.to_parent.size());
  for (Vertex i = 0; i < comp.num_vertices(); ++i)
    for (Vertex j = i + 1; j < comp.num_vertices(); ++j)
      if (!out.graph.adjacent(i, j)) comp.add_edge(i, j);
  if (g.has_labels())
    for (Vertex i = 0; i < comp.num_vertices(); ++i) comp.set_label(i, out.graph.label(i));
  out.graph = std::move(comp);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet unseen = s;
  while (unseen.any()) {
    VertexSet comp(g.num_vertices());
    VertexSet frontier(g.num_vertices());
    frontier.set(unseen.find_first());
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(g.num_vertices());
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
        next |= g.neighbors(static_cast<Vertex>(v));
      frontier = (next & s) - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace tpk
