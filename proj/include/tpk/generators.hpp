#ifndef TPK_GENERATORS_HPP
#define TPK_GENERATORS_HPP

#include <cstddef>
#include <cstdint>

#include "tpk/graph.hpp"
#include "tpk/kernelizer.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

/// Random universal clique decomposition on n vertices with shuffled vertex
/// ids: geometric bag sizes, at least two children per internal node.
UcdForest random_ucd_forest(std::size_t n, std::uint64_t seed);

Graph random_tp_graph(std::size_t n, std::uint64_t seed);

struct PlantedInstance {
  Instance instance;
  EditSet planted;  // a mode-legal solution of size <= k
};

/// Trivially perfect graph perturbed by k distinct pairs such that undoing
/// them is legal in `mode`. Fewer pairs are planted only if the graph runs
/// out of suitable pairs.
PlantedInstance gen_planted(std::size_t n, std::size_t k, std::uint64_t seed,
                            Mode mode = Mode::kEditing);

}  // namespace tpk

#endif  // TPK_GENERATORS_HPP
