#ifndef TPK_MATCHING_HPP
#define TPK_MATCHING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

struct Matching {
  std::vector<Pair> edges;  // pairwise vertex-disjoint, ascending

  std::size_t size() const { return edges.size(); }
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm). With a
/// threshold, the search may stop once the matching reaches that size.
Matching max_matching(const Graph& g, std::optional<std::size_t> threshold = std::nullopt);

/// Maximum matching using only edges of g between the disjoint sides a and b.
/// Throws std::invalid_argument when the sides overlap.
Matching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b,
                                std::optional<std::size_t> threshold = std::nullopt);

bool is_matching(const Graph& g, const Matching& m);

}  // namespace tpk

#endif  // TPK_MATCHING_HPP
