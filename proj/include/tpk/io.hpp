#ifndef TPK_IO_HPP
#define TPK_IO_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tpk/graph.hpp"
#include "tpk/kernelizer.hpp"
#include "tpk/sat_reduction.hpp"

namespace tpk {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Graph file: "p tpg <n> <m>", then m lines "e <u> <v>" (0-based), optional
/// "l <u> <text>" label lines and "#" comments.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0).
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string write_dimacs_cnf(const CnfFormula& f);

/// Edit sets as lines "x <u> <v>".
std::string write_editset(const EditSet& f);
EditSet parse_editset(std::string_view text);

/// One line per step:
///   step 3 rule=R2 k=3->2 witness=pair:4,7 removed=-
std::string write_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

struct RunReport {
  std::size_t n = 0, m = 0;
  std::int64_t k = 0;
  Mode mode = Mode::kEditing;
  bool is_kernel = false;
  std::string reason;
  std::size_t kernel_n = 0, kernel_m = 0;
  std::int64_t kernel_k = 0;
  std::map<std::string, std::size_t> rule_counts;
  std::size_t trace_length = 0;
  double wall_seconds = 0.0;
};

RunReport make_report(const Instance& input, Mode mode, const KernelOutcome& out, double seconds);
std::string report_to_json(const RunReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tpk

#endif  // TPK_IO_HPP
