#ifndef TPK_GRAPH_HPP
#define TPK_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef BOOST_DYNAMIC_BITSET_DONT_USE_FRIENDS
#define BOOST_DYNAMIC_BITSET_DONT_USE_FRIENDS
#endif
#include <boost/dynamic_bitset.hpp>

namespace tpk {

using Vertex = std::uint32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Raised for vertex ids or pairs that do not fit the graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, always stored as (min, max).
struct Pair {
  Vertex u = 0;
  Vertex v = 0;

  static Pair of(Vertex a, Vertex b);

  auto operator<=>(const Pair&) const = default;
};

/// A set of unordered pairs. Whether a pair means "toggle", "delete" or
/// "add" is decided by the consumer.
class EditSet {
 public:
  EditSet() = default;
  EditSet(std::initializer_list<Pair> pairs) : pairs_(pairs) {}

  bool insert(Pair p) { return pairs_.insert(p).second; }
  bool erase(Pair p) { return pairs_.erase(p) > 0; }
  bool contains(Pair p) const { return pairs_.contains(p); }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  bool operator==(const EditSet&) const = default;
  auto operator<=>(const EditSet&) const = default;

 private:
  std::set<Pair> pairs_;
};

enum class ObstructionKind { P4, C4 };

/// Four vertices inducing a P4 (listed in path order) or a C4 (listed in
/// cycle order).
struct Obstruction {
  std::array<Vertex, 4> vertices{};
  ObstructionKind kind = ObstructionKind::P4;

  bool operator==(const Obstruction&) const = default;
};

/// Simple undirected graph on the dense vertex range [0, n). Adjacency rows
/// are bitsets; labels are optional and never read by the algorithms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, const std::vector<Pair>& edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle(Pair p);

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighborhood(Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }
  std::size_t max_degree() const;

  VertexSet empty_set() const { return VertexSet(num_vertices()); }
  VertexSet all_vertices() const;
  std::vector<Pair> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  void set_label(Vertex v, std::string text);
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural equality; labels are compared too when either side has them.
  bool operator==(const Graph& other) const;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> adj_;
  std::size_t num_edges_ = 0;
  std::vector<std::string> labels_;
};

/// Induced (or complemented) subgraph together with the map from its dense
/// ids back to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Result of deleting vertices: the dense renumbering of the survivors.
struct VertexRemoval {
  Graph graph;
  std::vector<std::optional<Vertex>> remap;  // old id -> new id
};

/// |a & b| without materializing the intersection.
inline std::size_t intersection_count(const VertexSet& a, const VertexSet& b) {
  std::size_t total = 0;
  const auto& x = a.m_bits;
  const auto& y = b.m_bits;
  for (std::size_t i = 0, e = std::min(x.size(), y.size()); i < e; ++i)
    total += static_cast<std::size_t>(__builtin_popcountll(x[i] & y[i]));
  return total;
}

/// Hash over the raw blocks, for caching by vertex set.
struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull ^ s.size();
    for (auto block : s.m_bits) h = (h ^ block) * 1099511628211ull;
    return h;
  }
};

VertexSet make_set(std::size_t n, std::initializer_list<Vertex> members);
VertexSet make_set(std::size_t n, const std::vector<Vertex>& members);
std::vector<Vertex> to_vector(const VertexSet& s);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
VertexRemoval remove_vertices(const Graph& g, const VertexSet& s);
/// Survivor renumbering for removing `removed` from a graph on n vertices.
std::vector<std::optional<Vertex>> removal_remap(std::size_t n, const VertexSet& removed);

/// G with E(G) replaced by E(G) symmetric-difference f.
Graph apply_edits(const Graph& g, const EditSet& f);

/// If the four vertices induce a P4 or C4, returns it in path/cycle order.
std::optional<Obstruction> as_obstruction(const Graph& g, std::array<Vertex, 4> w);

/// Some induced P4 or C4, or nothing when g is trivially perfect. The scan
/// visits edges uv (u < v) in lexicographic order and reports the first edge
/// whose closed neighborhoods are not nested.
std::optional<Obstruction> find_obstruction(const Graph& g);

enum class ModulatorViolation {
  kAtMostOneInside,  // |W cap X| <= 1
  kForbiddenPair,    // |W cap X| = 2 as x1-y1-y2-x2(-x1)
};

struct ModulatorWitness {
  Obstruction obstruction;
  ModulatorViolation violation = ModulatorViolation::kAtMostOneInside;
};

/// Witness that x is not a TP-modulator of g, or nothing if it is one.
std::optional<ModulatorWitness> find_obstruction_avoiding(const Graph& g, const VertexSet& x);

/// Maximal sets of pairwise true twins, ordered by smallest member.
std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g);

bool is_module(const Graph& g, const VertexSet& m);

/// Complement of g[s], with ids remapped densely.
Subgraph complement_induced(const Graph& g, const VertexSet& s);

/// Connected components of g[s], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

}  // namespace tpk

#endif  // TPK_GRAPH_HPP
