#ifndef TPK_EXACT_SOLVER_HPP
#define TPK_EXACT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tpk/graph.hpp"
#include "tpk/kernelizer.hpp"

namespace tpk {

enum class SolveStatus { kFeasible, kInfeasible, kResourceExceeded };

const char* status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<EditSet> witness;
  std::uint64_t nodes_explored = 0;

  bool feasible() const { return status == SolveStatus::kFeasible; }
};

struct SolveOptions {
  std::uint64_t node_limit = 100'000'000;
};

/// Bounded search tree over the pairs of one obstruction at a time.
SolveResult solve_branching(const Graph& g, std::int64_t k, Mode mode, const SolveOptions& opts = {});

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteforceOptions {
  std::uint64_t max_sets = 50'000'000;
};

/// Tries all mode-legal pair sets of size <= k, by size and then
/// lexicographically. Throws EnumerationTooLarge past the guard.
SolveResult solve_bruteforce(const Graph& g, std::int64_t k, Mode mode,
                             const BruteforceOptions& opts = {});

/// Every minimum-size mode-legal editing set of size <= k; empty when none.
std::vector<EditSet> optimal_editsets(const Graph& g, std::int64_t k, Mode mode,
                                      const BruteforceOptions& opts = {});

/// Whether f solves (g, k) in the given mode.
bool is_valid_solution(const Graph& g, std::int64_t k, Mode mode, const EditSet& f);

}  // namespace tpk

#endif  // TPK_EXACT_SOLVER_HPP
