#include "tpk/tp_structure.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tpk {

NotTriviallyPerfect::NotTriviallyPerfect(Obstruction witness)
    : std::runtime_error("graph is not trivially perfect"), witness_(witness) {}

std::size_t UcdForest::depth(NodeId t) const {
  std::size_t d = 0;
  while (nodes[t].parent) {
    t = *nodes[t].parent;
    ++d;
  }
  return d;
}

bool UcdForest::is_ancestor(NodeId a, NodeId b) const {
  while (nodes[b].parent) {
    b = *nodes[b].parent;
    if (b == a) return true;
  }
  return false;
}

NodeId UcdForest::root_of(NodeId t) const {
  while (nodes[t].parent) t = *nodes[t].parent;
  return t;
}

NodeId UcdForest::lca(NodeId a, NodeId b) const {
  std::size_t da = depth(a), db = depth(b);
  while (da > db) {
    a = *nodes[a].parent;
    --da;
  }
  while (db > da) {
    b = *nodes[b].parent;
    --db;
  }
  while (a != b) {
    if (!nodes[a].parent || !nodes[b].parent) throw UcdError("lca of nodes in different trees");
    a = *nodes[a].parent;
    b = *nodes[b].parent;
  }
  return a;
}

VertexSet UcdForest::bag_set(NodeId t) const {
  VertexSet s(num_vertices);
  for (Vertex v : nodes[t].bag) s.set(v);
  return s;
}

VertexSet UcdForest::subtree_vertices(NodeId t) const {
  VertexSet s(num_vertices);
  std::vector<NodeId> stack{t};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    for (Vertex v : nodes[cur].bag) s.set(v);
    for (NodeId c : nodes[cur].children) stack.push_back(c);
  }
  return s;
}

bool is_trivially_perfect(const Graph& g) {
  std::vector<VertexSet> work{g.all_vertices()};
  while (!work.empty()) {
    VertexSet s = std::move(work.back());
    work.pop_back();
    for (VertexSet& comp : components(g, s)) {
      const std::size_t size = comp.count();
      if (size == 1) continue;
      VertexSet universal(g.num_vertices());
      for (auto v = comp.find_first(); v != VertexSet::npos; v = comp.find_next(v))
        if ((g.neighbors(static_cast<Vertex>(v)) & comp).count() == size - 1) universal.set(v);
      if (universal.none()) return false;
      comp -= universal;
      if (comp.any()) work.push_back(std::move(comp));
    }
  }
  return true;
}

void validate_ucd(const UcdForest& f) {
  const std::size_t n = f.num_vertices;
  if (f.vertex_node.size() != n) throw UcdError("vertex_node has wrong size");
  std::vector<int> seen(n, 0);
  for (NodeId t = 0; t < f.nodes.size(); ++t) {
    const UcdNode& node = f.nodes[t];
    if (node.bag.empty()) throw UcdError("empty bag at node " + std::to_string(t));
    for (Vertex v : node.bag) {
      if (v >= n) throw UcdError("bag vertex out of range at node " + std::to_string(t));
      if (seen[v]++) throw UcdError("vertex " + std::to_string(v) + " in two bags");
      if (f.vertex_node[v] != t) throw UcdError("vertex_node disagrees for " + std::to_string(v));
    }
    if (node.children.size() == 1)
      throw UcdError("internal node " + std::to_string(t) + " has a single child");
    for (NodeId c : node.children) {
      if (c >= f.nodes.size() || f.nodes[c].parent != t)
        throw UcdError("child link mismatch at node " + std::to_string(t));
    }
    if (node.parent) {
      if (*node.parent >= f.nodes.size()) throw UcdError("parent out of range");
      const auto& siblings = f.nodes[*node.parent].children;
      if (std::count(siblings.begin(), siblings.end(), t) != 1)
        throw UcdError("parent link mismatch at node " + std::to_string(t));
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw UcdError("vertex " + std::to_string(v) + " in no bag");
  std::vector<char> reached(f.nodes.size(), 0);
  std::vector<NodeId> stack;
  for (NodeId r : f.roots) {
    if (r >= f.nodes.size() || f.nodes[r].parent) throw UcdError("invalid root");
    stack.push_back(r);
  }
  while (!stack.empty()) {
    NodeId t = stack.back();
    stack.pop_back();
    if (reached[t]++) throw UcdError("node reached twice");
    for (NodeId c : f.nodes[t].children) stack.push_back(c);
  }
  if (std::count(reached.begin(), reached.end(), 0) != 0) throw UcdError("node unreachable from roots");
}

namespace {

// Closed-neighborhood row shared by every vertex of each bag: ancestors' bags plus the subtree.
std::vector<VertexSet> bag_rows(const UcdForest& f) {
  std::vector<VertexSet> below(f.nodes.size(), VertexSet(f.num_vertices));
  std::vector<VertexSet> rows(f.nodes.size(), VertexSet(f.num_vertices));
  std::vector<NodeId> order;
  std::vector<NodeId> stack(f.roots.rbegin(), f.roots.rend());
  while (!stack.empty()) {
    NodeId t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (NodeId c : f.nodes[t].children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex v : f.nodes[*it].bag) below[*it].set(v);
    for (NodeId c : f.nodes[*it].children) below[*it] |= below[c];
  }
  for (NodeId t : order) {
    VertexSet above(f.num_vertices);
    if (f.nodes[t].parent) {
      NodeId p = *f.nodes[t].parent;
      above = rows[p] - below[p];
      for (Vertex v : f.nodes[p].bag) above.set(v);
    }
    rows[t] = above | below[t];
  }
  return rows;
}

}  // namespace

Graph ucd_to_graph(const UcdForest& f) {
  validate_ucd(f);
  const auto rows = bag_rows(f);
  Graph g(f.num_vertices);
  for (NodeId t = 0; t < f.nodes.size(); ++t)
    for (Vertex v : f.nodes[t].bag)
      for (auto w = rows[t].find_next(v); w != VertexSet::npos; w = rows[t].find_next(w))
        g.add_edge(v, static_cast<Vertex>(w));
  return g;
}

UcdForest build_ucd(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto classes = true_twin_classes(g);
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex v : classes[c]) class_of[v] = c;
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);

  // In a TP graph the neighbors of a bag with larger degree are exactly its ancestors, and the
  // parent is the one of smallest degree among them.
  std::vector<std::optional<std::size_t>> parent(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Vertex r = classes[c][0];
    const std::size_t dr = deg[r];
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    const VertexSet& nb = g.neighbors(r);
    for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w)) {
      const std::size_t dw = deg[w];
      if (class_of[w] != c && dw > dr && dw < best_deg) {
        best_deg = dw;
        parent[c] = class_of[w];
      }
    }
  }

  std::vector<std::vector<std::size_t>> kids(classes.size());
  std::vector<std::size_t> top;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (parent[c])
      kids[*parent[c]].push_back(c);
    else
      top.push_back(c);
  }
  // Parents have strictly larger degree, so sorting classes by degree gives a bottom-up order.
  std::vector<std::size_t> by_degree(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) by_degree[c] = c;
  std::sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
    return deg[classes[a][0]] < deg[classes[b][0]];
  });
  std::vector<Vertex> sub_min(classes.size());
  for (std::size_t c : by_degree) {
    sub_min[c] = classes[c][0];
    for (std::size_t k : kids[c]) sub_min[c] = std::min(sub_min[c], sub_min[k]);
  }
  auto by_min = [&](std::size_t a, std::size_t b) { return sub_min[a] < sub_min[b]; };
  std::sort(top.begin(), top.end(), by_min);
  for (auto& k : kids) std::sort(k.begin(), k.end(), by_min);

  UcdForest f;
  f.num_vertices = n;
  f.vertex_node.assign(n, 0);
  f.nodes.reserve(classes.size());
  std::vector<std::pair<std::size_t, std::optional<NodeId>>> stack;
  for (auto it = top.rbegin(); it != top.rend(); ++it) stack.push_back({*it, std::nullopt});
  while (!stack.empty()) {
    auto [c, par] = stack.back();
    stack.pop_back();
    const NodeId id = f.nodes.size();
    f.nodes.push_back({par, classes[c], {}});
    for (Vertex v : classes[c]) f.vertex_node[v] = id;
    if (par)
      f.nodes[*par].children.push_back(id);
    else
      f.roots.push_back(id);
    for (auto it = kids[c].rbegin(); it != kids[c].rend(); ++it) stack.push_back({*it, id});
  }

  bool ok = true;
  try {
    validate_ucd(f);
    const auto rows = bag_rows(f);
    for (Vertex v = 0; v < n && ok; ++v) ok = rows[f.vertex_node[v]] == g.closed_neighborhood(v);
  } catch (const UcdError&) {
    ok = false;
  }
  if (!ok) {
    auto w = find_obstruction(g);
    if (!w) throw std::logic_error("UCD construction failed on a trivially perfect graph");
    throw NotTriviallyPerfect(*w);
  }
  return f;
}

Relation preceq(const UcdForest& f, Vertex a, Vertex b) {
  if (a >= f.num_vertices || b >= f.num_vertices) throw GraphError("preceq: vertex out of range");
  const NodeId ta = f.vertex_node[a], tb = f.vertex_node[b];
  if (ta == tb) return Relation::kSameBag;
  if (f.is_ancestor(ta, tb)) return Relation::kAncestor;
  if (f.is_ancestor(tb, ta)) return Relation::kDescendant;
  return Relation::kIncomparable;
}

AlphaResult alpha_tp(const UcdForest& f) {
  AlphaResult out;
  for (const UcdNode& node : f.nodes)
    if (node.children.empty()) out.witness.push_back(node.bag.front());
  std::sort(out.witness.begin(), out.witness.end());
  out.alpha = out.witness.size();
  return out;
}

AlphaResult alpha_tp(const Graph& g) { return alpha_tp(build_ucd(g)); }

bool is_tp_set_system(const SetFamily& f) {
  if (f.ground_size > 64) throw std::invalid_argument("set family ground set larger than 64");
  const std::uint64_t ground =
      f.ground_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.ground_size) - 1;
  for (std::uint64_t m : f.members)
    if (m & ~ground) throw std::invalid_argument("set family member outside the ground set");
  for (std::uint64_t x1 : f.members)
    for (std::uint64_t x2 : f.members) {
      const std::uint64_t d1 = x1 & ~x2, d2 = x2 & ~x1;
      if (!d1 || !d2) continue;
      for (std::uint64_t y : f.members)
        if ((y & d1) && (y & d2)) return false;
    }
  return true;
}

}  // namespace tpk
