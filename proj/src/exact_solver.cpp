#include "tpk/exact_solver.hpp"

#include <algorithm>

#include "tpk/tp_structure.hpp"

namespace tpk {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kResourceExceeded: return "resource-exceeded";
  }
  return "?";
}

namespace {

struct NodeLimitHit {};

class Brancher {
 public:
  Brancher(Graph g, Mode mode, std::uint64_t limit) : g_(std::move(g)), mode_(mode), limit_(limit) {}

  bool search(std::int64_t k) {
    if (++nodes_ > limit_) throw NodeLimitHit{};
    const auto o = find_obstruction(g_);
    if (!o) return true;
    if (k <= 0 || disjoint_packing(*o, k) > k) return false;
    std::array<Vertex, 4> w = o->vertices;
    std::sort(w.begin(), w.end());
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Pair p{w[i], w[j]};
        if (edits_.contains(p)) continue;
        const bool present = g_.adjacent(p.u, p.v);
        if (mode_ == Mode::kDeletion && !present) continue;
        if (mode_ == Mode::kCompletion && present) continue;
        g_.toggle(p);
        edits_.insert(p);
        if (search(k - 1)) return true;
        edits_.erase(p);
        g_.toggle(p);
      }
    return false;
  }

  const EditSet& edits() const { return edits_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Greedy count of vertex-disjoint obstructions, starting from `first` and
  // stopping once it exceeds `k`. Each one needs its own edit.
  std::int64_t disjoint_packing(const Obstruction& first, std::int64_t k) const {
    Graph h = g_;
    std::optional<Obstruction> o = first;
    std::int64_t count = 0;
    while (o && count <= k) {
      ++count;
      for (Vertex v : o->vertices) {
        const VertexSet nv = h.neighbors(v);
        for (auto w = nv.find_first(); w != VertexSet::npos; w = nv.find_next(w))
          h.remove_edge(v, static_cast<Vertex>(w));
      }
      o = find_obstruction(h);
    }
    return count;
  }

  Graph g_;
  Mode mode_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  EditSet edits_;
};

std::vector<Pair> legal_pairs(const Graph& g, Mode mode) {
  std::vector<Pair> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = u + 1; v < g.num_vertices(); ++v)
      if (pair_allowed(g, {u, v}, mode)) out.push_back({u, v});
  return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

// Calls visit(set) for every size-s subset of pairs in lexicographic index
// order; stops early when visit returns true.
template <typename Visit>
bool for_each_subset(const std::vector<Pair>& pairs, std::size_t s, Visit&& visit) {
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  if (s > pairs.size()) return false;
  for (;;) {
    EditSet f;
    for (std::size_t i : idx) f.insert(pairs[i]);
    if (visit(f)) return true;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == pairs.size() - s + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_guard(const std::vector<Pair>& pairs, std::int64_t k, const BruteforceOptions& opts) {
  std::uint64_t total = 0;
  for (std::int64_t s = 0; s <= k; ++s) {
    total += binomial_capped(pairs.size(), static_cast<std::uint64_t>(s), opts.max_sets);
    if (total > opts.max_sets)
      throw EnumerationTooLarge("brute-force enumeration exceeds " + std::to_string(opts.max_sets) +
                                " edit sets");
  }
}

}  // namespace

SolveResult solve_branching(const Graph& g, std::int64_t k, Mode mode, const SolveOptions& opts) {
  SolveResult r;
  Brancher b(g, mode, opts.node_limit);
  try {
    const bool ok = k >= 0 && b.search(k);
    r.status = ok ? SolveStatus::kFeasible : SolveStatus::kInfeasible;
    if (ok) r.witness = b.edits();
  } catch (const NodeLimitHit&) {
    r.status = SolveStatus::kResourceExceeded;
  }
  r.nodes_explored = b.nodes();
  return r;
}

SolveResult solve_bruteforce(const Graph& g, std::int64_t k, Mode mode, const BruteforceOptions& opts) {
  SolveResult r;
  if (k < 0) return r;
  const auto pairs = legal_pairs(g, mode);
  check_guard(pairs, k, opts);
  for (std::int64_t s = 0; s <= k; ++s) {
    const bool found = for_each_subset(pairs, static_cast<std::size_t>(s), [&](const EditSet& f) {
      ++r.nodes_explored;
      if (!is_trivially_perfect(apply_edits(g, f))) return false;
      r.witness = f;
      return true;
    });
    if (found) {
      r.status = SolveStatus::kFeasible;
      return r;
    }
  }
  return r;
}

std::vector<EditSet> optimal_editsets(const Graph& g, std::int64_t k, Mode mode,
                                      const BruteforceOptions& opts) {
  std::vector<EditSet> out;
  if (k < 0) return out;
  const auto pairs = legal_pairs(g, mode);
  check_guard(pairs, k, opts);
  for (std::int64_t s = 0; s <= k && out.empty(); ++s)
    for_each_subset(pairs, static_cast<std::size_t>(s), [&](const EditSet& f) {
      if (is_trivially_perfect(apply_edits(g, f))) out.push_back(f);
      return false;
    });
  return out;
}

bool is_valid_solution(const Graph& g, std::int64_t k, Mode mode, const EditSet& f) {
  if (static_cast<std::int64_t>(f.size()) > k) return false;
  for (const Pair& p : f)
    if (p.u >= g.num_vertices() || p.v >= g.num_vertices() || p.u >= p.v || !pair_allowed(g, p, mode))
      return false;
  return is_trivially_perfect(apply_edits(g, f));
}

}  // namespace tpk
