#include "tpk/sat_reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace tpk {

namespace {

int var_of(int lit) { return std::abs(lit); }

void check_literals(const CnfFormula& f) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    for (int lit : f.clauses[c])
      if (lit == 0 || static_cast<std::size_t>(var_of(lit)) > f.num_vars)
        throw UnsupportedFormula("clause " + std::to_string(c) + ": literal " + std::to_string(lit) +
                                 " out of range");
}

std::vector<std::size_t> occurrence_counts(const CnfFormula& f) {
  std::vector<std::size_t> count(f.num_vars + 1, 0);
  for (const auto& clause : f.clauses)
    for (int lit : clause) ++count[var_of(lit)];
  return count;
}

std::string slot_label(const char* role, int x, std::size_t i) {
  return std::string(role) + "[x" + std::to_string(x) + "," + std::to_string(i) + "]";
}

}  // namespace

CnfFormula normalize(const CnfFormula& f) {
  check_literals(f);
  CnfFormula out;
  out.num_vars = f.num_vars;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    std::vector<int> lits;
    for (int lit : f.clauses[c])
      if (std::find(lits.begin(), lits.end(), lit) == lits.end()) lits.push_back(lit);
    std::set<int> vars;
    for (int lit : lits) vars.insert(var_of(lit));
    if (lits.size() != 3 || vars.size() != 3)
      throw UnsupportedFormula("clause " + std::to_string(c) +
                               " does not have exactly three distinct variables");
    out.clauses.push_back(std::move(lits));
  }
  for (;;) {
    const auto count = occurrence_counts(out);
    auto once = [&](const std::vector<int>& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) { return count[var_of(lit)] == 1; });
    };
    auto it = std::find_if(out.clauses.begin(), out.clauses.end(), once);
    if (it == out.clauses.end()) break;
    out.clauses.push_back(*it);
  }
  return out;
}

bool is_normalized(const CnfFormula& f) {
  try {
    check_literals(f);
  } catch (const UnsupportedFormula&) {
    return false;
  }
  for (const auto& clause : f.clauses) {
    std::set<int> vars;
    for (int lit : clause) vars.insert(var_of(lit));
    if (clause.size() != 3 || vars.size() != 3) return false;
  }
  const auto count = occurrence_counts(f);
  return std::none_of(count.begin(), count.end(), [](std::size_t c) { return c == 1; });
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& alpha) {
  if (alpha.size() < f.num_vars + 1) throw std::invalid_argument("assignment shorter than variable count");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::vector<int>& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](int lit) { return alpha[var_of(lit)] == (lit > 0); });
  });
}

TpeInstance reduce(const CnfFormula& f) {
  if (!is_normalized(f)) throw std::invalid_argument("reduce: formula is not normalized");
  TpeInstance inst;
  inst.formula = f;
  std::map<int, std::vector<std::size_t>> occ;
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    for (int lit : f.clauses[c]) occ[var_of(lit)].push_back(c);

  std::size_t n = 0;
  for (const auto& [x, clauses] : occ) n += 4 * clauses.size();
  const std::size_t first_clause_vertex = n;
  n += f.clauses.size();
  Graph g(n);

  Vertex next = 0;
  for (const auto& [x, clauses] : occ) {
    auto& slots = inst.slots[x];
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      VariableSlot s{next, next + 1, next + 2, next + 3, clauses[i]};
      next += 4;
      g.set_label(s.bot, slot_label("bot", x, i));
      g.set_label(s.top, slot_label("top", x, i));
      g.set_label(s.dia, slot_label("dia", x, i));
      g.set_label(s.paw, slot_label("paw", x, i));
      slots.push_back(s);
    }
    const std::size_t p = slots.size();
    for (std::size_t i = 0; i < p; ++i) {
      g.add_edge(slots[i].bot, slots[i].top);
      g.add_edge(slots[i].top, slots[i].dia);
      g.add_edge(slots[i].dia, slots[(i + 1) % p].bot);
      g.add_edge(slots[i].paw, slots[i].top);
      g.add_edge(slots[i].paw, slots[i].bot);
    }
  }
  std::map<int, std::size_t> seen;
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const Vertex vc = static_cast<Vertex>(first_clause_vertex + c);
    g.set_label(vc, "clause[c" + std::to_string(c) + "]");
    inst.clause_vertex.push_back(vc);
    for (int lit : f.clauses[c]) {
      const VariableSlot& s = inst.slots[var_of(lit)][seen[var_of(lit)]++];
      g.add_edge(vc, lit > 0 ? s.top : s.bot);
    }
  }
  inst.g = std::move(g);
  inst.k = 5 * static_cast<std::int64_t>(f.clauses.size());
  return inst;
}

EditSet assignment_editset(const TpeInstance& inst, const std::vector<bool>& alpha) {
  const CnfFormula& f = inst.formula;
  if (!satisfies(f, alpha)) throw std::invalid_argument("assignment does not satisfy the formula");
  EditSet out;
  std::map<int, std::size_t> seen;
  std::vector<std::vector<Vertex>> attach(f.clauses.size());
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    for (int lit : f.clauses[c]) {
      const VariableSlot& s = inst.slots.at(var_of(lit))[seen[var_of(lit)]++];
      attach[c].push_back(lit > 0 ? s.top : s.bot);
    }
  for (const auto& [x, slots] : inst.slots) {
    const std::size_t p = slots.size();
    for (std::size_t i = 0; i < p; ++i) {
      if (alpha[x])
        out.insert(Pair::of(slots[i].dia, slots[(i + 1) % p].bot));
      else
        out.insert(Pair::of(slots[i].top, slots[i].dia));
    }
  }
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    std::size_t keep = 0;
    while (alpha[var_of(clause[keep])] != (clause[keep] > 0)) ++keep;
    for (std::size_t j = 0; j < clause.size(); ++j)
      if (j != keep) out.insert(Pair::of(inst.clause_vertex[c], attach[c][j]));
  }
  return out;
}

bool only_paws_and_crickets(const Graph& g) {
  for (const VertexSet& comp : components(g, g.all_vertices())) {
    std::vector<std::size_t> deg;
    std::size_t twice_edges = 0;
    for (Vertex v : to_vector(comp)) {
      deg.push_back(intersection_count(g.neighbors(v), comp));
      twice_edges += deg.back();
    }
    std::sort(deg.begin(), deg.end());
    const bool paw = deg == std::vector<std::size_t>{1, 2, 2, 3} && twice_edges == 8;
    const bool cricket = deg == std::vector<std::size_t>{1, 1, 2, 2, 4} && twice_edges == 10;
    if (!paw && !cricket) return false;
  }
  return true;
}

VerifyReport verify_instance(const TpeInstance& inst) {
  VerifyReport r;
  auto fail = [&](std::string why) {
    if (r.ok) {
      r.ok = false;
      r.first_violation = std::move(why);
    }
  };
  const std::size_t m = inst.formula.clauses.size();
  const Graph& g = inst.g;
  if (g.num_vertices() != 13 * m)
    fail("vertex count " + std::to_string(g.num_vertices()) + " != 13m = " + std::to_string(13 * m));
  if (g.num_edges() != 18 * m)
    fail("edge count " + std::to_string(g.num_edges()) + " != 18m = " + std::to_string(18 * m));
  if (inst.k != static_cast<std::int64_t>(5 * m))
    fail("budget " + std::to_string(inst.k) + " != 5m = " + std::to_string(5 * m));
  if (m > 0 && g.max_degree() != 4) fail("maximum degree " + std::to_string(g.max_degree()) + " != 4");
  if (!r.ok) return r;

  auto edge = [&](Vertex a, Vertex b, const std::string& what) {
    if (a >= g.num_vertices() || b >= g.num_vertices() || a == b || !g.adjacent(a, b))
      fail("missing " + what + " edge " + std::to_string(a) + "-" + std::to_string(b));
  };
  for (const auto& [x, slots] : inst.slots) {
    const std::size_t p = slots.size();
    for (std::size_t i = 0; i < p; ++i) {
      const VariableSlot& s = slots[i];
      edge(s.bot, s.top, "cycle");
      edge(s.top, s.dia, "cycle");
      edge(s.dia, slots[(i + 1) % p].bot, "cycle");
      edge(s.paw, s.top, "paw");
      edge(s.paw, s.bot, "paw");
      if (r.ok && g.degree(s.paw) != 2) fail("paw vertex " + std::to_string(s.paw) + " has degree != 2");
    }
  }
  std::map<int, std::size_t> seen;
  for (std::size_t c = 0; c < m && r.ok; ++c) {
    const Vertex vc = inst.clause_vertex.at(c);
    if (g.degree(vc) != 3) fail("clause vertex " + std::to_string(vc) + " has degree != 3");
    for (int lit : inst.formula.clauses[c]) {
      const auto& slots = inst.slots.at(var_of(lit));
      const std::size_t i = seen[var_of(lit)]++;
      if (i >= slots.size() || slots[i].clause != c) {
        fail("occurrence order mismatch in clause " + std::to_string(c));
        break;
      }
      edge(vc, lit > 0 ? slots[i].top : slots[i].bot, "clause");
    }
  }
  return r;
}

}  // namespace tpk
