#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "tpk/kernelizer.hpp"
#include "tpk/matching.hpp"
#include "tpk/modular_decomposition.hpp"

namespace tpk {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kEditing: return "edit";
    case Mode::kDeletion: return "delete";
    case Mode::kCompletion: return "complete";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "edit" || s == "editing") return Mode::kEditing;
  if (s == "delete" || s == "deletion") return Mode::kDeletion;
  if (s == "complete" || s == "completion") return Mode::kCompletion;
  return std::nullopt;
}

bool pair_allowed(const Graph& g, Pair p, Mode m) {
  switch (m) {
    case Mode::kEditing: return true;
    case Mode::kDeletion: return g.adjacent(p.u, p.v);
    case Mode::kCompletion: return !g.adjacent(p.u, p.v);
  }
  return false;
}

Instance canonical_no_instance() {
  return {Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0};
}

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::kR1: return "R1";
    case RuleId::kR1D: return "R1D";
    case RuleId::kR2: return "R2";
    case RuleId::kR2C: return "R2C";
    case RuleId::kR3: return "R3";
    case RuleId::kR4: return "R4";
    case RuleId::kR5: return "R5";
    case RuleId::kModulator: return "MOD";
  }
  return "?";
}

std::optional<RuleId> parse_rule(const std::string& s) {
  for (RuleId r : {RuleId::kR1, RuleId::kR1D, RuleId::kR2, RuleId::kR2C, RuleId::kR3, RuleId::kR4,
                   RuleId::kR5, RuleId::kModulator})
    if (s == rule_name(r)) return r;
  return std::nullopt;
}

namespace {

void require_budget(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("reduction rule called with negative budget");
}

// Whether the complement of g[c] has a matching of size at least t. Vertices
// universal within c are isolated in the complement and are dropped first.
bool complement_matching_at_least(const Graph& g, const VertexSet& c, std::size_t t) {
  VertexSet active(g.num_vertices());
  for (auto a = c.find_first(); a != VertexSet::npos; a = c.find_next(a))
    if (intersection_count(g.neighbors(static_cast<Vertex>(a)), c) + 1 < c.count()) active.set(a);
  if (active.count() < 2 * t) return false;
  const Subgraph comp = complement_induced(g, active);
  // A maximal matching is at least half of a maximum one.
  std::size_t greedy = 0;
  VertexSet used(comp.graph.num_vertices());
  for (Vertex a = 0; a < comp.graph.num_vertices(); ++a) {
    if (used.test(a)) continue;
    auto b = (comp.graph.neighbors(a) - used).find_first();
    if (b == VertexSet::npos) continue;
    used.set(a);
    used.set(b);
    if (++greedy >= t) return true;
  }
  if (2 * greedy < t) return false;
  return max_matching(comp.graph, t).size() >= t;
}

// Whether the complement has a matching of size at least t between n1 and n2.
bool cross_complement_matching_at_least(const Graph& g, const VertexSet& n1, const VertexSet& n2,
                                        std::size_t t) {
  const Subgraph comp = complement_induced(g, n1 | n2);
  VertexSet a(comp.graph.num_vertices()), b(comp.graph.num_vertices());
  for (Vertex i = 0; i < comp.to_parent.size(); ++i)
    (n1.test(comp.to_parent[i]) ? a : b).set(i);
  return max_bipartite_matching(comp.graph, a, b, t).size() >= t;
}

Instance without(const Instance& inst, const VertexSet& removed) {
  return {remove_vertices(inst.g, removed).graph, inst.k};
}

}  // namespace

std::optional<RuleFiring> rule1_add(const Instance& inst, Mode mode) {
  require_budget(inst);
  const Graph& g = inst.g;
  const std::size_t n = g.num_vertices();
  const std::size_t t = static_cast<std::size_t>(inst.k) + 1;
  std::unordered_map<VertexSet, bool, VertexSetHash> cache;
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  const std::size_t words = (n + 63) / 64;
  // Common-neighbor counts for the current u, filled by walking two-hop
  // paths when that is cheaper than one bitset intersection per v.
  std::vector<std::uint32_t> common(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nu = g.neighbors(u);
    if (deg[u] < 2 * t) continue;
    std::size_t walk = 0;
    for (auto w = nu.find_first(); w != VertexSet::npos; w = nu.find_next(w)) walk += deg[w];
    const bool counted = walk < (n - u) * words;
    if (counted) {
      std::fill(common.begin(), common.end(), 0);
      for (auto w = nu.find_first(); w != VertexSet::npos; w = nu.find_next(w)) {
        const VertexSet& nw = g.neighbors(static_cast<Vertex>(w));
        for (auto v = nw.find_next(u); v != VertexSet::npos; v = nw.find_next(v)) ++common[v];
      }
    }
    for (Vertex v = u + 1; v < n; ++v) {
      if (nu.test(v)) continue;
      if (counted ? common[v] < 2 * t : intersection_count(nu, g.neighbors(v)) < 2 * t) continue;
      VertexSet c = nu & g.neighbors(v);
      auto it = cache.find(c);
      if (it == cache.end()) it = cache.emplace(c, complement_matching_at_least(g, c, t)).first;
      if (!it->second) continue;
      RuleFiring f;
      f.step.witness.kind = WitnessKind::kPair;
      f.step.witness.pair = {u, v};
      f.step.k_before = inst.k;
      if (mode == Mode::kDeletion) {
        f.step.rule = RuleId::kR1D;
        f.step.k_after = inst.k;
        return f;
      }
      f.step.rule = RuleId::kR1;
      f.step.k_after = inst.k - 1;
      Instance next = inst;
      next.g.add_edge(u, v);
      next.k = inst.k - 1;
      f.next = std::move(next);
      return f;
    }
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule2_delete(const Instance& inst, Mode mode) {
  require_budget(inst);
  const Graph& g = inst.g;
  const std::size_t n = g.num_vertices();
  const std::size_t t = static_cast<std::size_t>(inst.k) + 1;
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (Vertex u = 0; u < n; ++u) {
    if (deg[u] < t + 1) continue;
    const VertexSet& nu = g.neighbors(u);
    for (auto vv = nu.find_next(u); vv != VertexSet::npos; vv = nu.find_next(vv)) {
      const Vertex v = static_cast<Vertex>(vv);
      if (deg[v] < t + 1) continue;
      const std::size_t common = intersection_count(nu, g.neighbors(v));
      if (deg[u] - 1 - common < t || deg[v] - 1 - common < t) continue;
      VertexSet n1 = nu - g.neighbors(v);
      n1.reset(v);
      VertexSet n2 = g.neighbors(v) - nu;
      n2.reset(u);
      if (!cross_complement_matching_at_least(g, n1, n2, t)) continue;
      RuleFiring f;
      f.step.witness.kind = WitnessKind::kPair;
      f.step.witness.pair = {u, v};
      f.step.k_before = inst.k;
      if (mode == Mode::kCompletion) {
        f.step.rule = RuleId::kR2C;
        f.step.k_after = inst.k;
        return f;
      }
      f.step.rule = RuleId::kR2;
      f.step.k_after = inst.k - 1;
      Instance next = inst;
      next.g.remove_edge(u, v);
      next.k = inst.k - 1;
      f.next = std::move(next);
      return f;
    }
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule3_twin(const Instance& inst) {
  require_budget(inst);
  const std::size_t limit = 2 * static_cast<std::size_t>(inst.k) + 5;
  for (const auto& cls : true_twin_classes(inst.g)) {
    if (cls.size() <= limit) continue;
    const Vertex v = cls.front();
    RuleFiring f;
    f.step.rule = RuleId::kR3;
    f.step.witness.kind = WitnessKind::kVertex;
    f.step.witness.vertices = {v};
    f.step.k_before = f.step.k_after = inst.k;
    f.step.removed = {v};
    f.next = without(inst, make_set(inst.g.num_vertices(), {v}));
    return f;
  }
  return std::nullopt;
}

std::optional<RuleFiring> rule4_module(const Instance& inst) {
  require_budget(inst);
  const Graph& g = inst.g;
  if (g.num_vertices() == 0) return std::nullopt;
  const std::size_t need = 2 * static_cast<std::size_t>(inst.k) + 5;
  const MdTree md = build_md(g);

  auto fire = [&](const VertexSet& m, const AlphaResult& alpha,
                  const Subgraph& sub) -> RuleFiring {
    VertexSet keep(g.num_vertices());
    for (std::size_t i = 0; i + 1 < need; ++i) keep.set(sub.to_parent[alpha.witness[i]]);
    RuleFiring f;
    f.step.rule = RuleId::kR4;
    f.step.witness.kind = WitnessKind::kModule;
    f.step.witness.vertices = to_vector(m);
    f.step.k_before = f.step.k_after = inst.k;
    const VertexSet removed = m - keep;
    f.step.removed = to_vector(removed);
    f.next = without(inst, removed);
    return f;
  };

  // Candidates are visited in the order of rule4_candidates, and the rule
  // fires on the first applicable candidate that contains no smaller
  // applicable candidate. Below a trivially perfect module every candidate is
  // an induced subgraph with no larger independence number, so subtrees under
  // an inapplicable TP module are skipped.
  //
  // TP-ness and alpha of modules follow from the tree: trivially perfect
  // graphs are cographs, so prime nodes are never TP, a join is TP when its
  // children are and at most one of them is not a clique, and alpha adds up
  // over union children and takes the maximum over join children.
  std::vector<char> tp(md.nodes.size()), clique(md.nodes.size());
  std::vector<std::size_t> alpha(md.nodes.size());
  for (std::size_t id = md.nodes.size(); id-- > 0;) {
    const MdNode& node = md.nodes[id];
    switch (node.kind) {
      case MdKind::kLeaf:
        tp[id] = clique[id] = 1;
        alpha[id] = 1;
        break;
      case MdKind::kPrime:
        break;
      case MdKind::kUnion:
        tp[id] = 1;
        for (std::size_t c : node.children) {
          tp[id] = tp[id] && tp[c];
          alpha[id] += alpha[c];
        }
        break;
      case MdKind::kJoin: {
        std::size_t loose = 0;
        tp[id] = clique[id] = 1;
        for (std::size_t c : node.children) {
          tp[id] = tp[id] && tp[c];
          clique[id] = clique[id] && clique[c];
          loose += !clique[c];
          alpha[id] = std::max(alpha[id], alpha[c]);
        }
        tp[id] = tp[id] && loose <= 1;
        break;
      }
    }
  }
  auto fire_on = [&](const VertexSet& m) {
    const Subgraph sub = induced_subgraph(g, m);
    return fire(m, alpha_tp(sub.graph), sub);
  };
  std::function<std::optional<RuleFiring>(std::size_t)> search = [&](std::size_t id) -> std::optional<RuleFiring> {
    const MdNode& node = md.nodes[id];
    if (node.module.count() < need) return std::nullopt;
    if (tp[id]) {
      if (alpha[id] < need) return std::nullopt;
      for (std::size_t c : node.children)
        if (auto inner = search(c)) return inner;
      return fire_on(node.module);
    }
    if (node.kind == MdKind::kUnion) {
      VertexSet union_tp(g.num_vertices());
      std::size_t union_alpha = 0;
      for (std::size_t c : node.children)
        if (tp[c]) {
          union_tp |= md.nodes[c].module;
          union_alpha += alpha[c];
        }
      if (union_alpha >= need) {
        for (std::size_t c : node.children)
          if (tp[c])
            if (auto inner = search(c)) return inner;
        return fire_on(union_tp);
      }
    }
    for (std::size_t c : node.children)
      if (auto inner = search(c)) return inner;
    return std::nullopt;
  };
  return search(md.root);
}

std::size_t comb_beta(const std::vector<bool>& simple, std::int64_t k) {
  const std::size_t t = 4 * static_cast<std::size_t>(k) + 3;
  const std::size_t complicated =
      static_cast<std::size_t>(std::count(simple.begin(), simple.end(), false));
  if (complicated >= t) return simple.size();
  std::size_t run = 0;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    run = simple[i] ? run + 1 : 0;
    if (run == t) return i + 1;
  }
  throw std::logic_error("comb without a long run of simple teeth");
}

std::optional<RuleFiring> rule5_comb(const Instance& inst, const Comb& comb) {
  require_budget(inst);
  const std::size_t t = 4 * static_cast<std::size_t>(inst.k) + 3;
  if (comb.length() < t * t) return std::nullopt;
  const std::size_t beta = comb_beta(comb.simple, inst.k);
  const VertexSet& tooth = comb.teeth.at(beta - 1);
  RuleFiring f;
  f.step.rule = RuleId::kR5;
  f.step.witness.kind = WitnessKind::kTooth;
  f.step.witness.vertices = to_vector(tooth);
  f.step.witness.index = beta;
  f.step.k_before = f.step.k_after = inst.k;
  f.step.removed = f.step.witness.vertices;
  f.next = without(inst, tooth);
  return f;
}

ModulatorResult build_modulator(const Instance& inst) {
  require_budget(inst);
  ModulatorResult out;
  Modulator m;
  m.x = inst.g.empty_set();
  for (;;) {
    auto w = find_obstruction_avoiding(inst.g, m.x);
    if (!w) {
      out.packed = m.packed;
      out.modulator = std::move(m);
      return out;
    }
    m.packed.push_back(w->obstruction);
    ++m.rounds;
    if (m.rounds > static_cast<std::size_t>(inst.k)) {
      out.packed = std::move(m.packed);
      return out;
    }
    for (Vertex v : w->obstruction.vertices) m.x.set(v);
  }
}

}  // namespace tpk
