#include "tpk/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tpk {

namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm with BFS over alternating trees and explicit base contraction.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : n_(static_cast<int>(g.num_vertices())), adj_(n_) {
    for (int v = 0; v < n_; ++v)
      for (Vertex w : to_vector(g.neighbors(static_cast<Vertex>(v)))) adj_[v].push_back(static_cast<int>(w));
    match_.assign(n_, kNone);
  }

  std::size_t run(std::optional<std::size_t> threshold) {
    std::size_t size = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (int w : adj_[v])
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (threshold && size >= *threshold) break;
      if (match_[v] != kNone) continue;
      int end = find_path(v);
      if (end == kNone) continue;
      ++size;
      while (end != kNone) {
        int pv = parent_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          int cur = lca(v, to);
          blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

Matching max_matching(const Graph& g, std::optional<std::size_t> threshold) {
  Blossom b(g);
  b.run(threshold);
  Matching m;
  const auto& mate = b.mate();
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) m.edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(mate[v])});
  return m;
}

Matching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b,
                                std::optional<std::size_t> threshold) {
  if (a.intersects(b)) throw std::invalid_argument("bipartite matching: sides overlap");
  const std::vector<Vertex> left = to_vector(a);
  std::vector<std::vector<Vertex>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) adj[i] = to_vector(g.neighbors(left[i]) & b);

  std::vector<int> mate_right(g.num_vertices(), kNone);
  std::vector<int> mate_left(left.size(), kNone);
  std::vector<char> visited(g.num_vertices());
  // Kuhn's augmenting paths, iterative to stay safe on long paths.
  auto augment = [&](int start) {
    std::fill(visited.begin(), visited.end(), 0);
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    std::vector<Vertex> via;  // right vertex used to leave each stack level
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx == adj[u].size()) {
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      Vertex w = adj[u][idx++];
      if (visited[w]) continue;
      visited[w] = 1;
      if (mate_right[w] == kNone) {
        via.push_back(w);
        for (std::size_t level = 0; level < stack.size(); ++level) {
          int lu = stack[level].first;
          Vertex lw = via[level];
          mate_right[lw] = lu;
          mate_left[lu] = static_cast<int>(lw);
        }
        return true;
      }
      via.push_back(w);
      stack.push_back({mate_right[w], 0});
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (threshold && size >= *threshold) break;
    if (augment(static_cast<int>(i))) ++size;
  }
  Matching m;
  for (std::size_t i = 0; i < left.size(); ++i)
    if (mate_left[i] != kNone) m.edges.push_back(Pair::of(left[i], static_cast<Vertex>(mate_left[i])));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet used(g.num_vertices());
  for (const Pair& p : m.edges) {
    if (!g.adjacent(p.u, p.v) || used.test(p.u) || used.test(p.v)) return false;
    used.set(p.u);
    used.set(p.v);
  }
  return true;
}

}  // namespace tpk
