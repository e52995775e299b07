#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "tpk/kernelizer.hpp"

namespace tpk {

namespace {

// Removes oversized twin-class representatives one at a time, exactly as repeated
// single applications would, but from one twin computation. Removing a vertex
// that keeps a twin changes no other twin relation, so the classes stay valid.
std::vector<RuleFiring> exhaust_twins(const Instance& inst) {
  std::vector<RuleFiring> steps;
  const std::size_t limit = 2 * static_cast<std::size_t>(inst.k) + 5;
  auto classes = true_twin_classes(inst.g);
  std::vector<std::size_t> head(classes.size(), 0);  // first surviving member per class
  std::vector<Vertex> removed_sorted;
  VertexSet removed(inst.g.num_vertices());
  for (;;) {
    std::size_t best = classes.size();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].size() - head[c] <= limit) continue;
      if (best == classes.size() || classes[c][head[c]] < classes[best][head[best]]) best = c;
    }
    if (best == classes.size()) break;
    const Vertex v = classes[best][head[best]++];
    const auto shift = std::lower_bound(removed_sorted.begin(), removed_sorted.end(), v) -
                       removed_sorted.begin();
    const Vertex current = v - static_cast<Vertex>(shift);
    removed_sorted.insert(removed_sorted.begin() + shift, v);
    removed.set(v);
    RuleFiring f;
    f.step.rule = RuleId::kR3;
    f.step.witness.kind = WitnessKind::kVertex;
    f.step.witness.vertices = {current};
    f.step.k_before = f.step.k_after = inst.k;
    f.step.removed = {current};
    steps.push_back(std::move(f));
  }
  if (!steps.empty()) steps.back().next = Instance{remove_vertices(inst.g, removed).graph, inst.k};
  return steps;
}

std::size_t distinct_x_neighborhoods(const Graph& g, const VertexSet& x) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!x.test(v)) seen.insert(g.neighbors(v) & x);
  return seen.size();
}

}  // namespace

KernelOutcome kernelize(const Instance& input, Mode mode, const KernelOptions& opts) {
  KernelOutcome out;
  Instance cur = input;
  auto reject = [&](std::string reason) {
    out.is_kernel = false;
    out.instance = canonical_no_instance();
    out.reason = std::move(reason);
    return out;
  };
  bool edge_rules_exhausted = false;
  for (;;) {
    if (cur.k < 0) return reject("budget exhausted");

    if (!(opts.incremental && edge_rules_exhausted)) {
      if (auto f = rule1_add(cur, mode)) {
        out.trace.push_back(f->step);
        if (!f->next) return reject("common-neighborhood rule proves a no-instance");
        cur = std::move(*f->next);
        edge_rules_exhausted = false;
        continue;
      }
      if (auto f = rule2_delete(cur, mode)) {
        out.trace.push_back(f->step);
        if (!f->next) return reject("private-neighborhood rule proves a no-instance");
        cur = std::move(*f->next);
        edge_rules_exhausted = false;
        continue;
      }
      edge_rules_exhausted = true;
    }

    if (opts.incremental) {
      auto steps = exhaust_twins(cur);
      if (!steps.empty()) {
        for (auto& s : steps) out.trace.push_back(s.step);
        cur = std::move(*steps.back().next);
        continue;
      }
    } else if (auto f = rule3_twin(cur)) {
      out.trace.push_back(f->step);
      cur = std::move(*f->next);
      continue;
    }

    if (auto f = rule4_module(cur)) {
      out.trace.push_back(f->step);
      cur = std::move(*f->next);
      continue;
    }

    ModulatorResult mod = build_modulator(cur);
    if (!mod.modulator) {
      TraceStep step;
      step.rule = RuleId::kModulator;
      step.witness.kind = WitnessKind::kObstructions;
      for (const Obstruction& o : mod.packed)
        step.witness.vertices.insert(step.witness.vertices.end(), o.vertices.begin(),
                                     o.vertices.end());
      step.k_before = step.k_after = cur.k;
      out.trace.push_back(std::move(step));
      return reject("more than k rounds of modulator packing");
    }
    const StructureAnalysis a = analyze_structure(cur, *mod.modulator);
    AnalysisRecord rec;
    rec.k = cur.k;
    rec.n = cur.g.num_vertices();
    rec.modulator_size = mod.modulator->x.count();
    rec.important_bags = a.important.i.size();
    for (const Comb& c : a.combs) rec.max_comb_length = std::max(rec.max_comb_length, c.length());
    rec.distinct_x_neighborhoods = distinct_x_neighborhoods(cur.g, mod.modulator->x);
    out.analyses.push_back(rec);

    bool fired = false;
    for (const Comb& c : a.combs) {
      if (auto f = rule5_comb(cur, c)) {
        out.trace.push_back(f->step);
        cur = std::move(*f->next);
        fired = true;
        break;
      }
    }
    if (fired) continue;

    out.is_kernel = true;
    out.instance = std::move(cur);
    return out;
  }
}

Instance replay(const Instance& inst, const ReductionTrace& trace) {
  Instance cur = inst;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& s = trace[i];
    if (s.k_before != cur.k)
      throw std::runtime_error("trace step " + std::to_string(i + 1) + ": budget mismatch");
    switch (s.rule) {
      case RuleId::kR1:
        cur.g.add_edge(s.witness.pair.u, s.witness.pair.v);
        break;
      case RuleId::kR2:
        cur.g.remove_edge(s.witness.pair.u, s.witness.pair.v);
        break;
      case RuleId::kR1D:
      case RuleId::kR2C:
      case RuleId::kModulator:
        return canonical_no_instance();
      case RuleId::kR3:
      case RuleId::kR4:
      case RuleId::kR5:
        cur.g = remove_vertices(cur.g, make_set(cur.g.num_vertices(), s.removed)).graph;
        break;
    }
    cur.k = s.k_after;
  }
  if (cur.k < 0) return canonical_no_instance();
  return cur;
}

std::map<std::string, std::size_t> rule_counts(const ReductionTrace& trace) {
  std::map<std::string, std::size_t> counts;
  for (const TraceStep& s : trace) ++counts[rule_name(s.rule)];
  return counts;
}

}  // namespace tpk
