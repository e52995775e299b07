#include "tpk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tpk {

namespace {

// Splits `total` into `parts` positive integers.
std::vector<std::size_t> random_composition(std::size_t total, std::size_t parts, std::mt19937_64& rng) {
  std::vector<std::size_t> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

}  // namespace

UcdForest random_ucd_forest(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::geometric_distribution<std::size_t> bag_extra(0.55);
  std::geometric_distribution<std::size_t> child_extra(0.6);

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  UcdForest f;
  f.num_vertices = n;
  f.vertex_node.assign(n, 0);
  std::size_t next_vertex = 0;

  // Work items: (subtree size, parent node).
  struct Item {
    std::size_t size;
    std::optional<NodeId> parent;
  };
  std::vector<Item> work;
  if (n > 0) {
    const std::size_t trees = std::min<std::size_t>(n, 1 + child_extra(rng) % 3);
    for (std::size_t s : random_composition(n, trees, rng)) work.push_back({s, std::nullopt});
  }
  std::reverse(work.begin(), work.end());
  while (!work.empty()) {
    const Item item = work.back();
    work.pop_back();
    std::size_t bag = std::min(item.size, 1 + bag_extra(rng));
    if (item.size - bag == 1) ++bag;
    const NodeId id = f.nodes.size();
    UcdNode node;
    node.parent = item.parent;
    for (std::size_t i = 0; i < bag; ++i) {
      const Vertex v = perm[next_vertex++];
      node.bag.push_back(v);
      f.vertex_node[v] = id;
    }
    std::sort(node.bag.begin(), node.bag.end());
    f.nodes.push_back(std::move(node));
    if (item.parent)
      f.nodes[*item.parent].children.push_back(id);
    else
      f.roots.push_back(id);
    const std::size_t rest = item.size - bag;
    if (rest == 0) continue;
    const std::size_t kids = std::min(rest, 2 + child_extra(rng));
    auto sizes = random_composition(rest, kids, rng);
    for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) work.push_back({*it, id});
  }
  return f;
}

Graph random_tp_graph(std::size_t n, std::uint64_t seed) { return ucd_to_graph(random_ucd_forest(n, seed)); }

PlantedInstance gen_planted(std::size_t n, std::size_t k, std::uint64_t seed, Mode mode) {
  const Graph base = random_tp_graph(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  PlantedInstance out;
  // The solution undoes the planted pairs, so deletion instances get extra
  // edges and completion instances lose edges.
  auto usable = [&](Pair p) {
    switch (mode) {
      case Mode::kEditing: return true;
      case Mode::kDeletion: return !base.adjacent(p.u, p.v);
      case Mode::kCompletion: return base.adjacent(p.u, p.v);
    }
    return false;
  };
  const std::size_t total_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t available = 0;
  if (n >= 2 && total_pairs <= 4096) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) available += usable({u, v});
  } else {
    available = n >= 2 ? total_pairs : 0;
  }
  const std::size_t want = std::min(k, available);
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::size_t attempts = 0;
    while (out.planted.size() < want && attempts < 1000000) {
      ++attempts;
      const Vertex a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const Pair p = Pair::of(a, b);
      if (usable(p)) out.planted.insert(p);
    }
  }
  out.instance.g = apply_edits(base, out.planted);
  out.instance.k = static_cast<std::int64_t>(k);
  return out;
}

}  // namespace tpk
