// Command-line front end: recognition, kernelization, exact solving, batch
// verification, 3SAT reduction and planted instance generation.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "tpk/exact_solver.hpp"
#include "tpk/generators.hpp"
#include "tpk/io.hpp"
#include "tpk/kernelizer.hpp"
#include "tpk/sat_reduction.hpp"
#include "tpk/tp_structure.hpp"

namespace fs = std::filesystem;
using namespace tpk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

std::string describe(const Obstruction& o) {
  std::string s = o.kind == ObstructionKind::C4 ? "C4" : "P4";
  for (Vertex v : o.vertices) s += " " + std::to_string(v);
  return s;
}

Mode mode_or_throw(const std::string& s) {
  auto m = parse_mode(s);
  if (!m) throw CLI::ValidationError("--mode", "expected edit, delete or complete");
  return *m;
}

int cmd_recognize(const std::string& path) {
  const Graph g = parse_graph(read_file(path));
  if (auto o = find_obstruction(g)) {
    std::cout << "not-trivially-perfect\nobstruction " << describe(*o) << "\n";
  } else {
    std::cout << "trivially-perfect\n";
  }
  return kExitOk;
}

int cmd_kernelize(const std::string& path, const std::string& mode_s, std::int64_t k,
                  const std::string& out_path, const std::string& report_path,
                  const std::string& trace_path) {
  const Mode mode = mode_or_throw(mode_s);
  const Instance inst{parse_graph(read_file(path)), k};
  const auto start = std::chrono::steady_clock::now();
  const KernelOutcome out = kernelize(inst, mode);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string report = report_to_json(make_report(inst, mode, out, secs));
  if (!out_path.empty()) write_file(out_path, write_graph(out.instance.g));
  if (!trace_path.empty()) write_file(trace_path, write_trace(out.trace));
  if (report_path.empty())
    std::cout << report;
  else
    write_file(report_path, report);
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& mode_s, std::int64_t k,
              std::uint64_t node_limit) {
  const Mode mode = mode_or_throw(mode_s);
  const Graph g = parse_graph(read_file(path));
  const SolveResult r = solve_branching(g, k, mode, {node_limit});
  std::cout << status_name(r.status) << "\nnodes " << r.nodes_explored << "\n";
  if (r.witness) std::cout << write_editset(*r.witness);
  return r.status == SolveStatus::kResourceExceeded ? kExitResource : kExitOk;
}

struct VerifyResult {
  std::string path;
  int code = kExitOk;
  std::string line;
};

VerifyResult verify_one(const std::string& path, Mode mode, std::int64_t k, std::uint64_t node_limit) {
  VerifyResult v{path, kExitOk, ""};
  const Instance inst{parse_graph(read_file(path)), k};
  const KernelOutcome out = kernelize(inst, mode);
  const SolveResult before = solve_branching(inst.g, inst.k, mode, {node_limit});
  const SolveResult after = out.is_kernel ? solve_branching(out.instance.g, out.instance.k, mode, {node_limit})
                                          : SolveResult{SolveStatus::kInfeasible, std::nullopt, 0};
  std::string verdict;
  if (before.status == SolveStatus::kResourceExceeded || after.status == SolveStatus::kResourceExceeded) {
    v.code = kExitResource;
    verdict = "resource-exceeded";
  } else if (before.feasible() != after.feasible() || out.instance.k > inst.k ||
             (before.witness && !is_valid_solution(inst.g, inst.k, mode, *before.witness))) {
    v.code = kExitMismatch;
    verdict = "MISMATCH";
  } else {
    verdict = "agree";
  }
  v.line = path + ": " + verdict + " original=" + status_name(before.status) +
           " kernel=" + (out.is_kernel ? status_name(after.status) : "no-instance") +
           " n=" + std::to_string(inst.g.num_vertices()) + "->" +
           std::to_string(out.instance.g.num_vertices()) + " k=" + std::to_string(inst.k) + "->" +
           std::to_string(out.instance.k);
  return v;
}

int cmd_verify(const std::vector<std::string>& inputs, const std::string& mode_s, std::int64_t k,
               std::uint64_t node_limit, unsigned jobs) {
  const Mode mode = mode_or_throw(mode_s);
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in))
        if (e.is_regular_file() && e.path().extension() == ".graph") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  std::vector<VerifyResult> results(files.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::string first_error;
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        results[i] = verify_one(files[i], mode, k, node_limit);
      } catch (const std::exception& e) {
        std::lock_guard lock(err_mu);
        if (first_error.empty()) first_error = files[i] + ": " + e.what();
        results[i] = {files[i], kExitUsage, files[i] + ": error " + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  int code = kExitOk;
  for (const auto& r : results) {
    std::cout << r.line << "\n";
    code = std::max(code, r.code == kExitUsage ? kExitMismatch : r.code);
  }
  if (!first_error.empty()) std::cerr << first_error << "\n";
  return code;
}

int cmd_reduce(const std::string& path, const std::string& out_path, const std::string& bits,
               const std::string& editset_path) {
  const CnfFormula f = normalize(parse_dimacs_cnf(read_file(path)));
  const TpeInstance inst = reduce(f);
  const VerifyReport check = verify_instance(inst);
  std::cout << "clauses=" << f.clauses.size() << " n=" << inst.g.num_vertices()
            << " m=" << inst.g.num_edges() << " k=" << inst.k << " max_degree=" << inst.g.max_degree()
            << "\n";
  if (!check.ok) {
    std::cerr << "instance check failed: " << check.first_violation << "\n";
    return kExitMismatch;
  }
  if (!out_path.empty()) write_file(out_path, write_graph(inst.g));
  if (bits.empty()) return kExitOk;
  if (bits.size() != f.num_vars || bits.find_first_not_of("01") != std::string::npos)
    throw CLI::ValidationError("--check-assignment", "expected one 0/1 character per variable");
  std::vector<bool> alpha(f.num_vars + 1, false);
  for (std::size_t i = 0; i < bits.size(); ++i) alpha[i + 1] = bits[i] == '1';
  if (!satisfies(f, alpha)) {
    std::cerr << "assignment does not satisfy the formula\n";
    return kExitMismatch;
  }
  const EditSet fa = assignment_editset(inst, alpha);
  const Graph edited = apply_edits(inst.g, fa);
  const bool ok = is_valid_solution(inst.g, inst.k, Mode::kDeletion, fa) &&
                  static_cast<std::int64_t>(fa.size()) == inst.k && only_paws_and_crickets(edited);
  std::cout << "assignment-editset size=" << fa.size() << " " << (ok ? "valid" : "INVALID") << "\n";
  if (!editset_path.empty())
    write_file(editset_path, write_editset(fa));
  else
    std::cout << write_editset(fa);
  return ok ? kExitOk : kExitMismatch;
}

int cmd_gen(std::size_t n, std::size_t k, std::uint64_t seed, const std::string& mode_s,
            const std::string& prefix) {
  const Mode mode = mode_or_throw(mode_s);
  const PlantedInstance p = gen_planted(n, k, seed, mode);
  write_file(prefix + ".graph", write_graph(p.instance.g));
  write_file(prefix + ".planted", write_editset(p.planted));
  std::cout << "n=" << p.instance.g.num_vertices() << " m=" << p.instance.g.num_edges()
            << " k=" << p.instance.k << " planted=" << p.planted.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivially perfect editing: kernelization and exact solving"};
  app.require_subcommand(1);

  std::string graph_path, mode = "edit", out_path, report_path, trace_path, bits, editset_path, prefix;
  std::int64_t k = 0;
  std::uint64_t node_limit = SolveOptions{}.node_limit;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::vector<std::string> inputs;

  auto* recognize = app.add_subcommand("recognize", "Test whether a graph is trivially perfect");
  recognize->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);

  auto* kern = app.add_subcommand("kernelize", "Reduce an instance to a kernel");
  kern->add_option("--mode", mode, "edit | delete | complete");
  kern->add_option("--k", k, "Budget")->required();
  kern->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  kern->add_option("--out", out_path, "Write the kernel graph here");
  kern->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  kern->add_option("--trace", trace_path, "Write the reduction trace here");

  auto* solve = app.add_subcommand("solve", "Decide an instance exactly");
  solve->add_option("--mode", mode, "edit | delete | complete");
  solve->add_option("--k", k, "Budget")->required();
  solve->add_option("--node-limit", node_limit, "Branching node guard");
  solve->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Check that kernelization preserves the answer");
  verify->add_option("--mode", mode, "edit | delete | complete");
  verify->add_option("--k", k, "Budget")->required();
  verify->add_option("--node-limit", node_limit, "Branching node guard");
  verify->add_option("--jobs", jobs, "Instances processed concurrently");
  verify->add_option("inputs", inputs, "Graph files or directories of *.graph files")
      ->required()
      ->check(CLI::ExistingPath);

  auto* red = app.add_subcommand("reduce-cnf", "Build the editing instance of a 3-CNF formula");
  red->add_option("cnf", graph_path, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  red->add_option("--out", out_path, "Write the labeled graph here");
  red->add_option("--check-assignment", bits, "0/1 string; emit and validate its deletion set");
  red->add_option("--editset", editset_path, "Write the deletion set here instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a planted instance");
  gen->add_option("--n", n, "Vertex count")->required();
  gen->add_option("--k", k, "Number of planted edits")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--mode", mode, "edit | delete | complete");
  gen->add_option("--out", prefix, "Output prefix for <prefix>.graph and <prefix>.planted")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*recognize) return cmd_recognize(graph_path);
    if (*kern) return cmd_kernelize(graph_path, mode, k, out_path, report_path, trace_path);
    if (*solve) return cmd_solve(graph_path, mode, k, node_limit);
    if (*verify) return cmd_verify(inputs, mode, k, node_limit, jobs);
    if (*red) return cmd_reduce(graph_path, out_path, bits, editset_path);
    if (*gen) return cmd_gen(n, static_cast<std::size_t>(k), seed, mode, prefix);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
