#ifndef TPK_TP_STRUCTURE_HPP
#define TPK_TP_STRUCTURE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

class NotTriviallyPerfect : public std::runtime_error {
 public:
  explicit NotTriviallyPerfect(Obstruction witness);
  const Obstruction& witness() const { return witness_; }

 private:
  Obstruction witness_;
};

class UcdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NodeId = std::size_t;

struct UcdNode {
  std::optional<NodeId> parent;
  std::vector<Vertex> bag;  // sorted
  std::vector<NodeId> children;
};

/// Universal clique decomposition of a trivially perfect graph. Node ids are
/// a preorder of the forest in which roots and children are visited by their
/// smallest subtree vertex.
struct UcdForest {
  std::size_t num_vertices = 0;
  std::vector<UcdNode> nodes;
  std::vector<NodeId> roots;
  std::vector<NodeId> vertex_node;  // vertex -> node holding it

  bool is_leaf(NodeId t) const { return nodes[t].children.empty(); }
  std::size_t depth(NodeId t) const;
  bool is_ancestor(NodeId a, NodeId b) const;  // a strictly above b
  NodeId root_of(NodeId t) const;
  NodeId lca(NodeId a, NodeId b) const;  // same tree required
  /// Union of the bags in the subtree of t.
  VertexSet subtree_vertices(NodeId t) const;
  VertexSet bag_set(NodeId t) const;
};

bool is_trivially_perfect(const Graph& g);

/// Throws NotTriviallyPerfect when g has an obstruction.
UcdForest build_ucd(const Graph& g);

/// Throws UcdError when the forest is not structurally valid.
Graph ucd_to_graph(const UcdForest& f);

/// Throws UcdError with the first violated structural property.
void validate_ucd(const UcdForest& f);

enum class Relation { kSameBag, kAncestor, kDescendant, kIncomparable };

/// How the bag of a relates to the bag of b.
Relation preceq(const UcdForest& f, Vertex a, Vertex b);

struct AlphaResult {
  std::size_t alpha = 0;
  std::vector<Vertex> witness;  // one vertex per leaf bag, ascending
};

AlphaResult alpha_tp(const Graph& g);
AlphaResult alpha_tp(const UcdForest& f);

/// Family of subsets of {0, ..., ground_size - 1}, each encoded as a bitmask.
struct SetFamily {
  std::size_t ground_size = 0;
  std::vector<std::uint64_t> members;
};

bool is_tp_set_system(const SetFamily& f);

}  // namespace tpk

#endif  // TPK_TP_STRUCTURE_HPP
