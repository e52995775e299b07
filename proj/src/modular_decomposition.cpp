#include "tpk/modular_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tpk/tp_structure.hpp"

namespace tpk {

namespace {

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
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
        next |= s - g.neighbors(static_cast<Vertex>(v));
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

// Partition of s \ {v} into the maximal modules of g[s] that avoid v.
std::vector<VertexSet> maximal_modules_avoiding(const Graph& g, const VertexSet& s, Vertex v) {
  std::vector<VertexSet> parts;
  VertexSet inside = g.neighbors(v) & s;
  VertexSet outside = s - inside;
  outside.reset(v);
  if (inside.any()) parts.push_back(inside);
  if (outside.any()) parts.push_back(outside);

  std::deque<Vertex> pivots;
  std::vector<char> queued(g.num_vertices(), 0);
  for (auto z = s.find_first(); z != VertexSet::npos; z = s.find_next(z))
    if (z != v) {
      pivots.push_back(static_cast<Vertex>(z));
      queued[z] = 1;
    }
  while (!pivots.empty()) {
    const Vertex z = pivots.front();
    pivots.pop_front();
    queued[z] = 0;
    const VertexSet& nz = g.neighbors(z);
    const std::size_t count = parts.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (parts[i].test(z)) continue;
      VertexSet hit = parts[i] & nz;
      if (hit.none() || hit == parts[i]) continue;
      VertexSet miss = parts[i] - hit;
      // Every vertex of the old part may now separate the two halves.
      for (auto w = parts[i].find_first(); w != VertexSet::npos; w = parts[i].find_next(w))
        if (!queued[w]) {
          pivots.push_back(static_cast<Vertex>(w));
          queued[w] = 1;
        }
      parts[i] = std::move(hit);
      parts.push_back(std::move(miss));
    }
  }
  return parts;
}

// Maximal strong modules of g[s] when g[s] is connected and co-connected.
std::vector<VertexSet> prime_children(const Graph& g, const VertexSet& s) {
  const Vertex v = static_cast<Vertex>(s.find_first());
  std::vector<VertexSet> out;
  VertexSet with_v(g.num_vertices());
  with_v.set(v);
  for (VertexSet& part : maximal_modules_avoiding(g, s, v)) {
    VertexSet probe = part;
    probe.set(v);
    if (module_closure(g, probe) == s)
      out.push_back(std::move(part));
    else
      with_v |= part;
  }
  out.push_back(std::move(with_v));
  return out;
}

}  // namespace

VertexSet module_closure(const Graph& g, const VertexSet& s) {
  VertexSet m = s;
  bool grew = true;
  while (grew) {
    grew = false;
    VertexSet touching(g.num_vertices());
    for (auto v = m.find_first(); v != VertexSet::npos; v = m.find_next(v))
      touching |= g.neighbors(static_cast<Vertex>(v));
    touching -= m;
    for (auto z = touching.find_first(); z != VertexSet::npos; z = touching.find_next(z)) {
      if (!m.is_subset_of(g.neighbors(static_cast<Vertex>(z)))) {
        m.set(z);
        grew = true;
      }
    }
  }
  return m;
}

MdTree build_md(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("modular decomposition of an empty graph");
  MdTree t;
  t.nodes.push_back({MdKind::kLeaf, g.all_vertices(), {}});
  // Depth-first so that node ids come out in preorder.
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> order;
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const VertexSet s = t.nodes[id].module;
    if (s.count() == 1) continue;
    std::vector<VertexSet> kids = components(g, s);
    MdKind kind = MdKind::kUnion;
    if (kids.size() == 1) {
      kids = co_components(g, s);
      kind = kids.size() > 1 ? MdKind::kJoin : MdKind::kPrime;
      if (kind == MdKind::kPrime) kids = prime_children(g, s);
    }
    std::sort(kids.begin(), kids.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
    t.nodes[id].kind = kind;
    for (VertexSet& k : kids) {
      t.nodes[id].children.push_back(t.nodes.size());
      t.nodes.push_back({MdKind::kLeaf, std::move(k), {}});
    }
    for (auto it = t.nodes[id].children.rbegin(); it != t.nodes[id].children.rend(); ++it)
      stack.push_back(*it);
  }
  // Renumber into preorder.
  std::vector<std::size_t> new_id(t.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = i;
  MdTree out;
  out.nodes.resize(t.nodes.size());
  for (std::size_t old = 0; old < t.nodes.size(); ++old) {
    MdNode node = std::move(t.nodes[old]);
    for (auto& c : node.children) c = new_id[c];
    out.nodes[new_id[old]] = std::move(node);
  }
  out.root = 0;
  return out;
}

std::vector<VertexSet> rule4_candidates(const Graph& g, const MdTree& t) {
  std::vector<VertexSet> out;
  for (const MdNode& node : t.nodes) {
    out.push_back(node.module);
    if (node.kind != MdKind::kUnion) continue;
    VertexSet union_tp(g.num_vertices());
    for (std::size_t c : node.children) {
      const VertexSet& m = t.nodes[c].module;
      if (is_trivially_perfect(induced_subgraph(g, m).graph)) union_tp |= m;
    }
    if (union_tp.any()) out.push_back(std::move(union_tp));
  }
  return out;
}

}  // namespace tpk
