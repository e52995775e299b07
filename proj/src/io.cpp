#include "tpk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace tpk {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T number(std::string_view s, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  return value;
}

bool blank_or_comment(std::string_view line, char comment) {
  auto t = tokens(line);
  return t.empty() || t.front().front() == comment;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<Graph> g;
  std::size_t declared_m = 0, seen_m = 0;
  std::set<Pair> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    if (blank_or_comment(lines[i], '#')) continue;
    const auto t = tokens(lines[i]);
    if (!g) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "tpg")
        throw ParseError(ln, "expected header 'p tpg <n> <m>'");
      g = Graph(number<std::size_t>(t[2], ln, "vertex count"));
      declared_m = number<std::size_t>(t[3], ln, "edge count");
      continue;
    }
    if (t[0] == "e") {
      if (t.size() != 3) throw ParseError(ln, "expected 'e <u> <v>'");
      const auto u = number<Vertex>(t[1], ln, "vertex id");
      const auto v = number<Vertex>(t[2], ln, "vertex id");
      if (u >= g->num_vertices() || v >= g->num_vertices())
        throw ParseError(ln, "vertex id out of range");
      if (u == v) throw ParseError(ln, "self-loop at " + std::to_string(u));
      if (!edges.insert(Pair::of(u, v)).second)
        throw ParseError(ln, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g->add_edge(u, v);
      ++seen_m;
    } else if (t[0] == "l") {
      if (t.size() < 3) throw ParseError(ln, "expected 'l <u> <text>'");
      const auto u = number<Vertex>(t[1], ln, "vertex id");
      if (u >= g->num_vertices()) throw ParseError(ln, "vertex id out of range");
      const std::string_view line = lines[i];
      g->set_label(u, std::string(line.substr(static_cast<std::size_t>(t[2].data() - line.data()))));
    } else {
      throw ParseError(ln, "unknown record '" + std::string(t[0]) + "'");
    }
  }
  if (!g) throw ParseError(lines.size() + 1, "missing header 'p tpg <n> <m>'");
  if (seen_m != declared_m)
    throw ParseError(lines.size() + 1, "header declares " + std::to_string(declared_m) +
                                           " edges, found " + std::to_string(seen_m));
  return *g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p tpg " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Pair& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (!g.label(v).empty()) out << "l " << v << ' ' << g.label(v) << '\n';
  return out.str();
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  const auto lines = split_lines(text);
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> open;
  std::size_t last_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    const auto t = tokens(lines[i]);
    if (t.empty() || t.front().front() == 'c') continue;
    if (t.front() == "%") break;
    last_line = ln;
    if (t.front() == "p") {
      if (header) throw ParseError(ln, "second header");
      if (t.size() != 4 || t[1] != "cnf") throw ParseError(ln, "expected 'p cnf <vars> <clauses>'");
      f.num_vars = number<std::size_t>(t[2], ln, "variable count");
      declared = number<std::size_t>(t[3], ln, "clause count");
      header = true;
      continue;
    }
    if (!header) throw ParseError(ln, "clause before 'p cnf' header");
    for (std::string_view tok : t) {
      const int lit = number<int>(tok, ln, "literal");
      if (lit == 0) {
        f.clauses.push_back(std::move(open));
        open.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::abs(lit)) > f.num_vars)
        throw ParseError(ln, "literal " + std::to_string(lit) + " exceeds declared variable count");
      open.push_back(lit);
    }
  }
  if (!header) throw ParseError(lines.size() + 1, "missing 'p cnf' header");
  if (!open.empty()) throw ParseError(last_line, "unterminated clause");
  if (f.clauses.size() != declared)
    throw ParseError(last_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                    std::to_string(f.clauses.size()));
  return f;
}

std::string write_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string write_editset(const EditSet& f) {
  std::ostringstream out;
  for (const Pair& p : f) out << "x " << p.u << ' ' << p.v << '\n';
  return out.str();
}

EditSet parse_editset(std::string_view text) {
  EditSet f;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank_or_comment(lines[i], '#')) continue;
    const auto t = tokens(lines[i]);
    if (t.size() != 3 || t[0] != "x") throw ParseError(i + 1, "expected 'x <u> <v>'");
    const auto u = number<Vertex>(t[1], i + 1, "vertex id");
    const auto v = number<Vertex>(t[2], i + 1, "vertex id");
    if (u == v) throw ParseError(i + 1, "pair with equal endpoints");
    if (!f.insert(Pair::of(u, v))) throw ParseError(i + 1, "duplicate pair");
  }
  return f;
}

namespace {

std::string join(const std::vector<Vertex>& vs) {
  if (vs.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

std::vector<Vertex> split_ids(std::string_view s, std::size_t ln) {
  std::vector<Vertex> out;
  if (s == "-") return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(number<Vertex>(s.substr(start, end - start), ln, "vertex id"));
    start = end + 1;
  }
  return out;
}

std::string_view field(std::string_view tok, std::string_view key, std::size_t ln) {
  if (tok.size() <= key.size() || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
    throw ParseError(ln, "expected field '" + std::string(key) + "='");
  return tok.substr(key.size() + 1);
}

}  // namespace

std::string write_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& s = trace[i];
    out << "step " << (i + 1) << " rule=" << rule_name(s.rule) << " k=" << s.k_before << "->"
        << s.k_after << " witness=";
    switch (s.witness.kind) {
      case WitnessKind::kPair: out << "pair:" << s.witness.pair.u << ',' << s.witness.pair.v; break;
      case WitnessKind::kVertex: out << "vertex:" << join(s.witness.vertices); break;
      case WitnessKind::kModule: out << "module:" << join(s.witness.vertices); break;
      case WitnessKind::kTooth:
        out << "tooth:" << s.witness.index << ':' << join(s.witness.vertices);
        break;
      case WitnessKind::kObstructions: out << "obstructions:" << join(s.witness.vertices); break;
    }
    out << " removed=" << join(s.removed) << '\n';
  }
  return out.str();
}

ReductionTrace parse_trace(std::string_view text) {
  ReductionTrace trace;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    if (blank_or_comment(lines[i], '#')) continue;
    const auto t = tokens(lines[i]);
    if (t.size() != 6 || t[0] != "step") throw ParseError(ln, "expected a step record");
    if (number<std::size_t>(t[1], ln, "step number") != trace.size() + 1)
      throw ParseError(ln, "steps out of order");
    TraceStep s;
    const auto rule = parse_rule(std::string(field(t[2], "rule", ln)));
    if (!rule) throw ParseError(ln, "unknown rule");
    s.rule = *rule;
    const std::string_view k = field(t[3], "k", ln);
    const std::size_t arrow = k.find("->");
    if (arrow == std::string_view::npos) throw ParseError(ln, "expected k=<before>-><after>");
    s.k_before = number<std::int64_t>(k.substr(0, arrow), ln, "budget");
    s.k_after = number<std::int64_t>(k.substr(arrow + 2), ln, "budget");
    const std::string_view w = field(t[4], "witness", ln);
    const std::size_t colon = w.find(':');
    if (colon == std::string_view::npos) throw ParseError(ln, "expected witness=<kind>:<ids>");
    const std::string_view kind = w.substr(0, colon);
    std::string_view rest = w.substr(colon + 1);
    if (kind == "pair") {
      s.witness.kind = WitnessKind::kPair;
      const auto ids = split_ids(rest, ln);
      if (ids.size() != 2) throw ParseError(ln, "pair witness needs two ids");
      s.witness.pair = Pair::of(ids[0], ids[1]);
    } else if (kind == "vertex" || kind == "module" || kind == "obstructions") {
      s.witness.kind = kind == "vertex"   ? WitnessKind::kVertex
                       : kind == "module" ? WitnessKind::kModule
                                          : WitnessKind::kObstructions;
      s.witness.vertices = split_ids(rest, ln);
    } else if (kind == "tooth") {
      s.witness.kind = WitnessKind::kTooth;
      const std::size_t c2 = rest.find(':');
      if (c2 == std::string_view::npos) throw ParseError(ln, "tooth witness needs an index");
      s.witness.index = number<std::size_t>(rest.substr(0, c2), ln, "tooth index");
      s.witness.vertices = split_ids(rest.substr(c2 + 1), ln);
    } else {
      throw ParseError(ln, "unknown witness kind");
    }
    s.removed = split_ids(field(t[5], "removed", ln), ln);
    trace.push_back(std::move(s));
  }
  return trace;
}

RunReport make_report(const Instance& input, Mode mode, const KernelOutcome& out, double seconds) {
  RunReport r;
  r.n = input.g.num_vertices();
  r.m = input.g.num_edges();
  r.k = input.k;
  r.mode = mode;
  r.is_kernel = out.is_kernel;
  r.reason = out.reason;
  r.kernel_n = out.instance.g.num_vertices();
  r.kernel_m = out.instance.g.num_edges();
  r.kernel_k = out.instance.k;
  r.rule_counts = rule_counts(out.trace);
  r.trace_length = out.trace.size();
  r.wall_seconds = seconds;
  return r;
}

std::string report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["input"] = {{"n", r.n}, {"m", r.m}, {"k", r.k}, {"mode", mode_name(r.mode)}};
  j["outcome"] = r.is_kernel ? "kernel" : "no-instance";
  if (!r.is_kernel) j["reason"] = r.reason;
  j["kernel"] = {{"n", r.kernel_n}, {"m", r.kernel_m}, {"k", r.kernel_k}};
  j["rule_counts"] = r.rule_counts;
  j["trace_length"] = r.trace_length;
  j["wall_seconds"] = r.wall_seconds;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace tpk
