#ifndef TPK_MODULAR_DECOMPOSITION_HPP
#define TPK_MODULAR_DECOMPOSITION_HPP

#include <cstddef>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

enum class MdKind { kLeaf, kUnion, kJoin, kPrime };

struct MdNode {
  MdKind kind = MdKind::kLeaf;
  VertexSet module;
  std::vector<std::size_t> children;  // ordered by smallest vertex
};

struct MdTree {
  std::vector<MdNode> nodes;  // preorder
  std::size_t root = 0;
};

/// Modular decomposition tree of g; throws std::invalid_argument for n = 0.
MdTree build_md(const Graph& g);

/// Smallest module of g containing s.
VertexSet module_closure(const Graph& g, const VertexSet& s);

/// Candidate modules for the independent-module rule, in preorder: each node's
/// module, followed for union nodes by the union of its children that induce
/// trivially perfect graphs.
std::vector<VertexSet> rule4_candidates(const Graph& g, const MdTree& t);

}  // namespace tpk

#endif  // TPK_MODULAR_DECOMPOSITION_HPP
