#ifndef TPK_SAT_REDUCTION_HPP
#define TPK_SAT_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// Clauses hold signed variable ids in [1, num_vars].
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

class UnsupportedFormula : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Collapses repeated literals, rejects clauses that do not have exactly three
/// distinct variables, and duplicates the earliest clause containing a
/// variable that occurs once until every used variable occurs at least twice.
CnfFormula normalize(const CnfFormula& f);

bool is_normalized(const CnfFormula& f);

/// alpha[x] is the value of variable x; alpha[0] is unused.
bool satisfies(const CnfFormula& f, const std::vector<bool>& alpha);

/// Vertices of one occurrence of a variable in the cycle gadget.
struct VariableSlot {
  Vertex bot = 0, top = 0, dia = 0, paw = 0;
  std::size_t clause = 0;  // clause holding this occurrence
};

struct TpeInstance {
  Graph g;
  std::int64_t k = 0;
  CnfFormula formula;
  std::map<int, std::vector<VariableSlot>> slots;  // variable -> occurrences in clause order
  std::vector<Vertex> clause_vertex;
};

/// Throws std::invalid_argument when f is not normalized.
TpeInstance reduce(const CnfFormula& f);

/// Deletion set built from a satisfying assignment. Throws
/// std::invalid_argument when alpha does not satisfy the formula.
EditSet assignment_editset(const TpeInstance& inst, const std::vector<bool>& alpha);

/// Whether every connected component is a paw or a cricket.
bool only_paws_and_crickets(const Graph& g);

struct VerifyReport {
  bool ok = true;
  std::string first_violation;
};

VerifyReport verify_instance(const TpeInstance& inst);

}  // namespace tpk

#endif  // TPK_SAT_REDUCTION_HPP
