#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tpk/kernelizer.hpp"

namespace tpk {

VertexSet x_neighborhood(const Graph& g, const VertexSet& x, Vertex v) {
  if (x.test(v)) throw std::invalid_argument("x_neighborhood: vertex lies in the modulator");
  return g.neighbors(v) & x;
}

TypeClassification classify_vertex_type(const Graph& g, const Subgraph& rest, const UcdForest& ucd,
                                        Vertex x_vertex) {
  const std::size_t m = rest.to_parent.size();
  if (std::find(rest.to_parent.begin(), rest.to_parent.end(), x_vertex) != rest.to_parent.end())
    throw std::invalid_argument("classify_vertex_type: vertex is not in the modulator");
  VertexSet u(m);
  for (Vertex i = 0; i < m; ++i)
    if (g.adjacent(x_vertex, rest.to_parent[i])) u.set(i);

  TypeClassification out;
  bool type0 = true;
  for (NodeId r : ucd.roots) {
    VertexSet comp = ucd.subtree_vertices(r);
    if (!comp.intersects(u)) continue;
    if (!comp.is_subset_of(u)) {
      type0 = false;
      break;
    }
    out.components.push_back(std::move(comp));
  }
  if (type0) return out;
  out.components.clear();

  // Nodes whose bag meets U, and which subtrees contain such a node.
  std::vector<char> hit(ucd.nodes.size(), 0), touched(ucd.nodes.size(), 0);
  for (auto v = u.find_first(); v != VertexSet::npos; v = u.find_next(v)) {
    NodeId t = ucd.vertex_node[v];
    hit[t] = 1;
    for (;;) {
      if (touched[t]) break;
      touched[t] = 1;
      if (!ucd.nodes[t].parent) break;
      t = *ucd.nodes[t].parent;
    }
  }
  std::vector<NodeId> touched_roots;
  for (NodeId r : ucd.roots)
    if (touched[r]) touched_roots.push_back(r);
  if (touched_roots.size() != 1)
    throw StructureError("neighborhood of modulator vertex " + std::to_string(x_vertex) +
                         " spans several partial components");

  NodeId t = touched_roots.front();
  VertexSet path(m);  // bags strictly above t
  std::vector<NodeId> below;
  for (;;) {
    below.clear();
    for (NodeId c : ucd.nodes[t].children)
      if (touched[c]) below.push_back(c);
    if (below.size() != 1) break;
    for (Vertex v : ucd.nodes[t].bag) path.set(v);
    t = below.front();
  }
  const VertexSet bag = ucd.bag_set(t);
  out.t_x = t;
  if (below.empty() && path.is_subset_of(u) && u.is_subset_of(path | bag)) {
    out.type = NeighborhoodType::kType1;
    return out;
  }
  VertexSet expected = path | bag;
  for (NodeId c : below) expected |= ucd.subtree_vertices(c);
  if (below.size() >= 2 && expected == u) {
    out.type = NeighborhoodType::kType2;
    out.subtrees = below;
    return out;
  }
  throw StructureError("neighborhood of modulator vertex " + std::to_string(x_vertex) +
                       " matches no type");
}

std::vector<NodeId> lca_closure(const UcdForest& f, const std::vector<NodeId>& m) {
  std::set<NodeId> closed(m.begin(), m.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<NodeId> cur(closed.begin(), closed.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (f.root_of(cur[i]) != f.root_of(cur[j])) continue;
        if (closed.insert(f.lca(cur[i], cur[j])).second) grew = true;
      }
  }
  return {closed.begin(), closed.end()};
}

ImportantBags mark_important_bags(const UcdForest& f,
                                  const std::vector<TypeClassification>& classifications) {
  ImportantBags out;
  std::set<NodeId> i0;
  for (const auto& c : classifications)
    if (c.type != NeighborhoodType::kType0) i0.insert(*c.t_x);
  out.i0.assign(i0.begin(), i0.end());
  std::set<NodeId> all;
  for (NodeId t : lca_closure(f, out.i0)) all.insert(t);
  for (NodeId t : out.i0) all.insert(f.root_of(t));
  out.i.assign(all.begin(), all.end());
  return out;
}

RemainderPartition partition_remainder(const Graph& forest_graph, const UcdForest& f,
                                       const ImportantBags& important) {
  const std::size_t n = f.num_vertices;
  RemainderPartition out;
  out.v_i = VertexSet(n);
  out.v_0 = VertexSet(n);
  std::vector<char> is_imp(f.nodes.size(), 0);
  for (NodeId t : important.i) {
    is_imp[t] = 1;
    for (Vertex v : f.nodes[t].bag) out.v_i.set(v);
  }
  for (NodeId top = 0; top < f.nodes.size(); ++top) {
    if (is_imp[top]) continue;
    const auto& parent = f.nodes[top].parent;
    if (parent && !is_imp[*parent]) continue;
    VertexSet vertices(n);
    std::vector<NodeId> below;
    std::vector<NodeId> stack{top};
    while (!stack.empty()) {
      NodeId t = stack.back();
      stack.pop_back();
      for (Vertex v : f.nodes[t].bag) vertices.set(v);
      for (NodeId c : f.nodes[t].children) (is_imp[c] ? below.push_back(c) : stack.push_back(c));
    }
    const std::size_t degree = below.size() + (parent ? 1 : 0);
    if (degree == 0) {
      out.v_0 |= vertices;
    } else if (degree == 1 && parent) {
      auto [it, fresh] = out.tassels.emplace(*parent, vertices);
      if (!fresh) it->second |= vertices;
    } else if (degree == 2 && parent) {
      Comb comb;
      comb.top = *parent;
      comb.bottom = below.front();
      comb.shaft_vertices = VertexSet(n);
      NodeId prev = comb.bottom;
      NodeId a = *f.nodes[prev].parent;
      for (;;) {
        comb.shaft.push_back(a);
        for (Vertex v : f.nodes[a].bag) comb.shaft_vertices.set(v);
        VertexSet tooth(n);
        for (NodeId c : f.nodes[a].children)
          if (c != prev) tooth |= f.subtree_vertices(c);
        bool edgeless = true;
        for (auto v = tooth.find_first(); v != VertexSet::npos && edgeless; v = tooth.find_next(v))
          edgeless = !forest_graph.neighbors(static_cast<Vertex>(v)).intersects(tooth);
        comb.teeth.push_back(std::move(tooth));
        comb.simple.push_back(edgeless);
        if (a == top) break;
        prev = a;
        a = *f.nodes[a].parent;
      }
      out.combs.push_back(std::move(comb));
    } else {
      throw StructureError("component of the forest minus important bags touches " +
                           std::to_string(degree) + " important bags");
    }
  }
  std::sort(out.combs.begin(), out.combs.end(),
            [](const Comb& a, const Comb& b) { return a.bottom < b.bottom; });
  return out;
}

Comb lift_comb(const Comb& c, const Subgraph& rest, std::size_t parent_n) {
  auto lift = [&](const VertexSet& s) {
    VertexSet out(parent_n);
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(rest.to_parent[v]);
    return out;
  };
  Comb out = c;
  out.shaft_vertices = lift(c.shaft_vertices);
  for (auto& t : out.teeth) t = lift(t);
  return out;
}

StructureAnalysis analyze_structure(const Instance& inst, const Modulator& m) {
  StructureAnalysis a;
  a.modulator = m;
  a.rest = induced_subgraph(inst.g, inst.g.all_vertices() - m.x);
  a.ucd = build_ucd(a.rest.graph);
  a.x_vertices = to_vector(m.x);
  for (Vertex x : a.x_vertices) a.types.push_back(classify_vertex_type(inst.g, a.rest, a.ucd, x));
  a.important = mark_important_bags(a.ucd, a.types);
  a.partition = partition_remainder(a.rest.graph, a.ucd, a.important);
  for (const Comb& c : a.partition.combs)
    a.combs.push_back(lift_comb(c, a.rest, inst.g.num_vertices()));
  return a;
}

}  // namespace tpk
