// irr: irredundancy analysis for directed graphs.
//
// Exit status: 0 success / irredundant / PASS, 1 bad edges or FAIL,
// 2 input or parameter error, 3 search budget exhausted.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "irr/constructors.hpp"
#include "irr/edge_list.hpp"
#include "irr/irredundance.hpp"
#include "irr/reduction.hpp"
#include "irr/report.hpp"
#include "irr/search.hpp"

namespace {

using namespace irr;
using Clock = std::chrono::steady_clock;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kInputError = 2;
constexpr int kPartial = 3;

bool trace_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("IRR_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }();
  return on;
}

template <typename... Args>
void trace(const Args&... args) {
  if (!trace_enabled()) return;
  std::cerr << "[irr] ";
  (std::cerr << ... << args);
  std::cerr << '\n';
}

struct Options {
  bool timing = true;
  std::string format = "auto";
  std::string input;
  // construct
  std::size_t path_n = 0;
  std::size_t star_n = 0;
  std::size_t random_n = 0;
  std::string tree_file;
  std::uint64_t seed = 20240901;
  std::size_t part_a = 0;
  std::size_t part_b = 0;
  // search / verify
  std::size_t n = 0;
  std::string budget;
  int jobs = 0;
  bool no_prune = false;
  bool serial = false;
  std::size_t max_n = 0;
  std::size_t min_edges = 0;
  std::vector<std::size_t> parts;
};

std::chrono::milliseconds parse_budget(const std::string& text) {
  if (text.empty()) return std::chrono::milliseconds{0};
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw GraphError("bad budget '" + text + "'");
  }
  const std::string unit = text.substr(used);
  double ms = 0;
  if (unit.empty() || unit == "s") {
    ms = value * 1e3;
  } else if (unit == "ms") {
    ms = value;
  } else if (unit == "m") {
    ms = value * 60e3;
  } else if (unit == "h") {
    ms = value * 3600e3;
  } else {
    throw GraphError("bad budget unit '" + unit + "' (use ms, s, m or h)");
  }
  if (ms < 0) throw GraphError("budget must be non-negative");
  return std::chrono::milliseconds{static_cast<long long>(ms)};
}

Digraph load_graph(const Options& o) {
  const std::string text = read_file(o.input);
  std::string format = o.format;
  if (format == "auto") {
    const bool dot = o.input.ends_with(".dot") || o.input.ends_with(".gv");
    format = dot ? "dot" : "edgelist";
  }
  trace("reading ", o.input, " as ", format);
  if (format == "dot") return parse_dot(text).graph;
  return parse_edge_list(text);
}

std::optional<double> elapsed(const Options& o, Clock::time_point start) {
  if (!o.timing) return std::nullopt;
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(const json& report) { std::cout << report.dump(2) << '\n'; }

int cmd_check(const Options& o) {
  const auto start = Clock::now();
  const Digraph g = load_graph(o);
  trace("n=", g.vertex_count(), " edges=", g.edge_count());
  const auto report = check(g);
  emit(make_report("check", g, to_json(report), elapsed(o, start)));
  return report.is_irredundant ? kOk : kFound;
}

int cmd_reduce(const Options& o) {
  const auto start = Clock::now();
  const Digraph g = load_graph(o);
  const auto report = check(g);
  if (!report.is_irredundant) {
    json result = to_json(report);
    result["steps"] = json::array();
    result["error"] = "input is not irredundant; contraction is undefined";
    emit(make_report("reduce", g, std::move(result), elapsed(o, start)));
    return kFound;
  }
  const auto trace_steps = reduce_fully(g);
  trace("contractions: ", trace_steps.size());
  emit(make_report("reduce", g, to_json(trace_steps), elapsed(o, start)));
  return kOk;
}

int cmd_construct_double_tree(const Options& o) {
  const int given = (o.path_n > 0) + (o.star_n > 0) + (o.random_n > 0) + !o.tree_file.empty();
  if (given != 1) throw GraphError("construct double-tree: give exactly one of --path, --star, --random, --tree");
  std::size_t n = 0;
  std::vector<UndirectedEdge> tree;
  if (o.path_n > 0) {
    n = o.path_n;
    tree = path_tree(n);
  } else if (o.star_n > 0) {
    n = o.star_n;
    for (std::size_t v = 1; v < n; ++v) tree.push_back({0, static_cast<Vertex>(v)});
  } else if (o.random_n > 0) {
    n = o.random_n;
    tree = random_tree(n, o.seed);
  } else {
    std::tie(n, tree) = parse_tree_edge_list(read_file(o.tree_file));
  }
  std::cout << serialize_edge_list(double_tree(n, tree));
  return kOk;
}

int cmd_construct_bipartite(const Options& o) {
  std::cout << serialize_edge_list(oriented_complete_bipartite(o.part_a, o.part_b));
  return kOk;
}

SearchOptions search_options(const Options& o) {
  SearchOptions so;
  so.budget = parse_budget(o.budget);
  so.pruning = !o.no_prune;
  so.jobs = o.jobs;
  return so;
}

int cmd_search(const Options& o) {
  const auto start = Clock::now();
  const auto so = search_options(o);
  trace("search n=", o.n, " budget_ms=", so.budget.count(), " pruning=", so.pruning);
  const SearchReport r = o.serial ? max_irredundant_serial(o.n, so) : max_irredundant(o.n, so);
  json result = to_json(r);
  if (!o.timing) result["wall_seconds"] = nullptr;
  emit(make_report("search", std::nullopt, std::move(result), elapsed(o, start)));
  return r.partial ? kPartial : kOk;
}

int cmd_enumerate(const Options& o) {
  const auto start = Clock::now();
  const auto codes = enumerate_irredundant(o.n, o.min_edges);
  json classes = json::array();
  for (const auto& c : codes) {
    json g = to_json(decode(c));
    g["canonical_code"] = to_hex(c);
    classes.push_back(std::move(g));
  }
  json result = {{"n", o.n}, {"min_edges", o.min_edges}, {"class_count", codes.size()}, {"classes", std::move(classes)}};
  emit(make_report("enumerate", std::nullopt, std::move(result), elapsed(o, start)));
  return kOk;
}

json verify_result(const std::string& suite, bool pass, json checks) {
  return {{"suite", suite}, {"verdict", pass ? "PASS" : "FAIL"}, {"checks", std::move(checks)}};
}

int cmd_verify_theorem(const Options& o) {
  const auto start = Clock::now();
  const auto verdicts = verify_theorem(o.max_n, search_options(o));
  bool pass = true;
  bool partial = false;
  json checks = json::array();
  for (const auto& v : verdicts) {
    pass &= v.pass();
    partial |= v.search.partial;
    json c = to_json(v);
    if (!o.timing) c["wall_seconds"] = nullptr;
    checks.push_back(std::move(c));
  }
  emit(make_report("verify", std::nullopt, verify_result("theorem", pass, std::move(checks)), elapsed(o, start)));
  if (partial) return kPartial;
  return pass ? kOk : kFound;
}

int cmd_verify_lemma_simple(const Options& o) {
  const auto start = Clock::now();
  if (o.parts.size() != 2) throw GraphError("verify lemma-simple: --parts takes two sizes");
  const auto r = verify_bipartite_simplicity(o.parts[0], o.parts[1]);
  const bool simple = r.non_simple_count == 0;
  const bool no_long_paths = !r.long_path_checked || r.long_path_count == 0;
  json checks = json::array();
  checks.push_back({{"name", "irredundant_orientations_are_simple"},
                    {"verdict", simple ? "PASS" : "FAIL"},
                    {"counterexample_count", r.non_simple_count}});
  checks.push_back({{"name", "irredundant_orientations_have_no_double_edge"},
                    {"verdict", r.double_edge_count == 0 ? "PASS" : "FAIL"},
                    {"counterexample_count", r.double_edge_count}});
  checks.push_back({{"name", "no_directed_path_of_length_three"},
                    {"verdict", !r.long_path_checked ? "SKIPPED" : (no_long_paths ? "PASS" : "FAIL")},
                    {"counterexample_count", r.long_path_count}});
  json result = verify_result("lemma-simple", simple && no_long_paths, std::move(checks));
  result["sweep"] = to_json(r);
  emit(make_report("verify", std::nullopt, std::move(result), elapsed(o, start)));
  return simple && no_long_paths ? kOk : kFound;
}

int cmd_verify_recurrence(const Options& o) {
  const auto start = Clock::now();
  const BoundTable t = recurrence_bound(o.max_n);
  bool pass = true;
  for (std::size_t n = 1; n <= t.max_n(); ++n) pass &= t[n] == f_closed_form(n);
  json checks = json::array();
  checks.push_back({{"name", "recurrence_matches_closed_form"}, {"verdict", pass ? "PASS" : "FAIL"}});
  json result = verify_result("recurrence", pass, std::move(checks));
  result["table"] = to_json(t);
  emit(make_report("verify", std::nullopt, std::move(result), elapsed(o, start)));
  return pass ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irredundancy analysis for directed graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--no-timing", [&](std::int64_t) { o.timing = false; }, "Omit wall-clock timing from reports");

  auto* check_cmd = app.add_subcommand("check", "Report every bad edge with a witness path");
  check_cmd->add_option("input", o.input, "Graph file")->required();
  check_cmd->add_option("--format", o.format, "edgelist, dot or auto")->check(CLI::IsMember({"auto", "edgelist", "dot"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "Contract double edges and directed triangles");
  reduce_cmd->add_option("input", o.input, "Graph file")->required();
  reduce_cmd->add_option("--format", o.format, "edgelist, dot or auto")->check(CLI::IsMember({"auto", "edgelist", "dot"}));

  auto* construct_cmd = app.add_subcommand("construct", "Print an extremal construction as an edge list");
  construct_cmd->require_subcommand(1);
  auto* dt_cmd = construct_cmd->add_subcommand("double-tree", "Double every edge of a tree");
  dt_cmd->add_option("--path", o.path_n, "Path on N vertices");
  dt_cmd->add_option("--star", o.star_n, "Star on N vertices");
  dt_cmd->add_option("--random", o.random_n, "Uniform random labeled tree on N vertices");
  dt_cmd->add_option("--seed", o.seed, "Seed for --random");
  dt_cmd->add_option("--tree", o.tree_file, "Edge-list file of undirected tree edges");
  auto* bip_cmd = construct_cmd->add_subcommand("bipartite", "All edges from part U to part V");
  bip_cmd->add_option("a", o.part_a, "Size of U")->required();
  bip_cmd->add_option("b", o.part_b, "Size of V")->required();

  auto* search_cmd = app.add_subcommand("search", "Exhaustive maximum irredundant search (n <= 8)");
  search_cmd->add_option("n", o.n, "Vertex count")->required();
  search_cmd->add_option("--budget", o.budget, "Time limit, e.g. 90s, 30m, 2h");
  search_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all)");
  search_cmd->add_flag("--no-prune", o.no_prune, "Disable edge-count bounds");
  search_cmd->add_flag("--serial", o.serial, "Use the single-threaded reference");

  auto* enum_cmd = app.add_subcommand("enumerate", "List irredundant classes (n <= 6)");
  enum_cmd->add_option("n", o.n, "Vertex count")->required();
  enum_cmd->add_option("--min-edges", o.min_edges, "Only graphs with at least this many edges");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->require_subcommand(1);
  auto* thm_cmd = verify_cmd->add_subcommand("theorem", "Exact f(n) and extremal families for n <= max-n");
  thm_cmd->add_option("--max-n", o.max_n, "Largest n to search")->required();
  thm_cmd->add_option("--budget", o.budget, "Time limit per n");
  thm_cmd->add_option("--jobs", o.jobs, "Worker threads (0 = all)");
  auto* lemma_cmd = verify_cmd->add_subcommand("lemma-simple", "Sweep all orientations of K_{a,b}");
  lemma_cmd->add_option("--parts", o.parts, "Part sizes a b")->required()->expected(2);
  auto* rec_cmd = verify_cmd->add_subcommand("recurrence", "Recurrence bound against the closed form");
  rec_cmd->add_option("--max", o.max_n, "Largest n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(o);
    if (*reduce_cmd) return cmd_reduce(o);
    if (*dt_cmd) return cmd_construct_double_tree(o);
    if (*bip_cmd) return cmd_construct_bipartite(o);
    if (*search_cmd) return cmd_search(o);
    if (*enum_cmd) return cmd_enumerate(o);
    if (*thm_cmd) return cmd_verify_theorem(o);
    if (*lemma_cmd) return cmd_verify_lemma_simple(o);
    if (*rec_cmd) return cmd_verify_recurrence(o);
  } catch (const ParseError& e) {
    std::cerr << "irr: " << o.input << ": " << e.what() << '\n';
    return kInputError;
  } catch (const GraphError& e) {
    std::cerr << "irr: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
