#ifndef TPK_KERNELIZER_HPP
#define TPK_KERNELIZER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpk/graph.hpp"
#include "tpk/tp_structure.hpp"

namespace tpk {

enum class Mode { kEditing, kDeletion, kCompletion };

const char* mode_name(Mode m);  // "edit", "delete", "complete"
std::optional<Mode> parse_mode(const std::string& s);

/// Whether adding/removing the pair is allowed in this mode for graph g.
bool pair_allowed(const Graph& g, Pair p, Mode m);

struct Instance {
  Graph g;
  std::int64_t k = 0;  // may drop below zero right before a no-instance is declared
};

/// The constant-size no-instance (C4, 0).
Instance canonical_no_instance();

enum class RuleId { kR1, kR1D, kR2, kR2C, kR3, kR4, kR5, kModulator };

const char* rule_name(RuleId r);  // "R1", "R1D", ..., "MOD"
std::optional<RuleId> parse_rule(const std::string& s);

enum class WitnessKind { kPair, kVertex, kModule, kTooth, kObstructions };

struct Witness {
  WitnessKind kind = WitnessKind::kPair;
  Pair pair;                    // kPair
  std::vector<Vertex> vertices;  // kVertex (one id), kModule, kTooth, kObstructions
  std::size_t index = 0;        // kTooth: position of the tooth on its comb, 1-based
};

/// One rule application. Vertex ids refer to the instance before the step;
/// `removed` lists the deleted vertices, from which the dense remap follows.
struct TraceStep {
  RuleId rule = RuleId::kR1;
  Witness witness;
  std::int64_t k_before = 0;
  std::int64_t k_after = 0;
  std::vector<Vertex> removed;
};

using ReductionTrace = std::vector<TraceStep>;

/// Result of one rule application: the next instance, or nothing when the
/// rule proves a no-instance.
struct RuleFiring {
  std::optional<Instance> next;
  TraceStep step;
};

std::optional<RuleFiring> rule1_add(const Instance& inst, Mode mode);
std::optional<RuleFiring> rule2_delete(const Instance& inst, Mode mode);
std::optional<RuleFiring> rule3_twin(const Instance& inst);
std::optional<RuleFiring> rule4_module(const Instance& inst);

// ---------------------------------------------------------------------------
// Modulator and the structure of G - X.

class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Modulator {
  VertexSet x;
  std::size_t rounds = 0;
  std::vector<Obstruction> packed;  // one witness per round
};

struct ModulatorResult {
  std::optional<Modulator> modulator;  // nothing: more than k disjoint-ish witnesses, no-instance
  std::vector<Obstruction> packed;
};

ModulatorResult build_modulator(const Instance& inst);

/// N(v) intersected with x; throws std::invalid_argument when v is in x.
VertexSet x_neighborhood(const Graph& g, const VertexSet& x, Vertex v);

enum class NeighborhoodType { kType0, kType1, kType2 };

/// Classification of U_x = N(x) \ X against the UCD of G - X. Node and
/// vertex ids refer to the forest (the vertex ids of G - X).
struct TypeClassification {
  NeighborhoodType type = NeighborhoodType::kType0;
  std::vector<VertexSet> components;  // Type 0: the components forming U_x
  std::optional<NodeId> t_x;          // Type 1 and 2
  std::vector<NodeId> subtrees;       // Type 2: roots of the included child subtrees
};

/// `rest` is G - X as an induced subgraph of g, `ucd` its decomposition.
TypeClassification classify_vertex_type(const Graph& g, const Subgraph& rest, const UcdForest& ucd,
                                        Vertex x_vertex);

std::vector<NodeId> lca_closure(const UcdForest& f, const std::vector<NodeId>& m);

struct ImportantBags {
  std::vector<NodeId> i0;  // sorted
  std::vector<NodeId> i;   // sorted
};

ImportantBags mark_important_bags(const UcdForest& f,
                                  const std::vector<TypeClassification>& classifications);

struct Comb {
  NodeId top = 0;                // important node above the shaft
  NodeId bottom = 0;             // important node below the shaft
  std::vector<NodeId> shaft;     // a_1 (parent of bottom) .. a_d (child of top)
  std::vector<VertexSet> teeth;  // R_1 .. R_d
  VertexSet shaft_vertices;
  std::vector<bool> simple;      // per tooth: edgeless

  std::size_t length() const { return shaft.size(); }
};

struct RemainderPartition {
  VertexSet v_i;
  VertexSet v_0;
  std::map<NodeId, VertexSet> tassels;  // important node -> tassel below it
  std::vector<Comb> combs;              // ordered by bottom node
};

/// Splits the vertices of the forest by the components of T - I. All sets
/// are over forest vertex ids. Throws StructureError if a component touches
/// more than two important nodes.
RemainderPartition partition_remainder(const Graph& forest_graph, const UcdForest& f,
                                       const ImportantBags& important);

/// Comb with its vertex sets translated to ids of the parent graph.
Comb lift_comb(const Comb& c, const Subgraph& rest, std::size_t parent_n);

/// Removes the tooth selected by the comb rule; nothing if the comb is shorter
/// than (4k+3)^2. Comb vertex sets must be in instance ids.
std::optional<RuleFiring> rule5_comb(const Instance& inst, const Comb& comb);

/// Index beta (1-based) chosen by the comb rule for the given tooth flags.
std::size_t comb_beta(const std::vector<bool>& simple, std::int64_t k);

/// Everything derived from a successful modulator for one instance.
struct StructureAnalysis {
  Modulator modulator;
  Subgraph rest;
  UcdForest ucd;
  std::vector<Vertex> x_vertices;
  std::vector<TypeClassification> types;  // parallel to x_vertices
  ImportantBags important;
  RemainderPartition partition;  // forest ids
  std::vector<Comb> combs;       // instance ids
};

StructureAnalysis analyze_structure(const Instance& inst, const Modulator& m);

// ---------------------------------------------------------------------------
// Driver.

/// Bounds observed at every structure analysis during one run.
struct AnalysisRecord {
  std::int64_t k = 0;
  std::size_t n = 0;
  std::size_t modulator_size = 0;
  std::size_t important_bags = 0;
  std::size_t max_comb_length = 0;
  std::size_t distinct_x_neighborhoods = 0;
};

struct KernelOutcome {
  bool is_kernel = false;
  Instance instance;  // the kernel, or the canonical no-instance
  std::string reason;  // why the instance was rejected
  ReductionTrace trace;
  std::vector<AnalysisRecord> analyses;
};

struct KernelOptions {
  /// Skip rescanning the edge rules after steps that only delete vertices and
  /// batch consecutive twin removals. The output is identical either way.
  bool incremental = true;
};

KernelOutcome kernelize(const Instance& inst, Mode mode, const KernelOptions& opts = {});

/// Re-applies a trace. Returns the canonical no-instance when the trace ends
/// in a rejecting step or a negative budget.
Instance replay(const Instance& inst, const ReductionTrace& trace);

std::map<std::string, std::size_t> rule_counts(const ReductionTrace& trace);

}  // namespace tpk

#endif  // TPK_KERNELIZER_HPP
