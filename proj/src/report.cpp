#include "irr/report.hpp"

namespace irr {

json to_json(const Digraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json to_json(const BadEdgeWitness& w) {
  return {{"edge", {w.edge.from, w.edge.to}}, {"witness_path", w.alternate_path}};
}

json to_json(const IrredundanceReport& r) {
  json bad = json::array();
  for (const auto& w : r.bad_edges) bad.push_back(to_json(w));
  return {{"is_irredundant", r.is_irredundant}, {"bad_edges", std::move(bad)}};
}

json to_json(const std::vector<ContractionOutcome>& trace) {
  json steps = json::array();
  for (const auto& step : trace) {
    const std::size_t after = step.contracted.edge_count();
    const std::size_t before = after + (step.kind == CycleKind::DoubleEdge ? 2 : 3);
    steps.push_back({{"kind", to_string(step.kind)},
                     {"cycle", step.cycle},
                     {"merged_vertex", step.merged_vertex},
                     {"vertex_map", step.vertex_map},
                     {"edges_before", before},
                     {"edges_after", after},
                     {"vertices_after", step.contracted.vertex_count()}});
  }
  json final_graph = trace.empty() ? json(nullptr) : to_json(trace.back().contracted);
  return {{"steps", std::move(steps)}, {"final", std::move(final_graph)}};
}

json to_json(const SearchReport& r) {
  json reps = json::array();
  for (const auto& code : r.extremal_codes) {
    const Digraph g = decode(code);
    json rep = to_json(g);
    rep["canonical_code"] = to_hex(code);
    rep["class"] = to_string(classify_extremal(g).kind);
    reps.push_back(std::move(rep));
  }
  return {{"n", r.n},
          {"f_value", r.f_value},
          {"partial", r.partial},
          {"extremal_class_count", r.extremal_codes.size()},
          {"labeled_extremal_count", r.labeled_extremal},
          {"extremal_representatives", std::move(reps)},
          {"nodes_expanded", r.nodes_expanded},
          {"leaves", r.leaves},
          {"prune_counts",
           {{"candidate_bound", r.prune_counts.candidate_bound}, {"recurrence_cap", r.prune_counts.recurrence_cap}}},
          {"workers", r.workers},
          {"wall_seconds", r.wall_time.count()}};
}

json to_json(const TheoremVerdict& v) {
  json unexpected = json::array();
  for (const auto& code : v.unexpected) {
    json g = to_json(decode(code));
    g["canonical_code"] = to_hex(code);
    unexpected.push_back(std::move(g));
  }
  return {{"n", v.n},
          {"verdict", v.pass() ? "PASS" : "FAIL"},
          {"f_found", v.f_found},
          {"f_expected", v.f_expected},
          {"f_matches", v.f_matches},
          {"characterization_holds", v.characterization_holds},
          {"families_complete", v.families_complete},
          {"partial", v.search.partial},
          {"double_tree_classes", v.double_tree_classes},
          {"bipartite_classes", v.bipartite_classes},
          {"other_classes", v.other_classes},
          {"counterexamples", std::move(unexpected)},
          {"nodes_expanded", v.search.nodes_expanded},
          {"wall_seconds", v.search.wall_time.count()}};
}

json to_json(const BipartiteSweepReport& r) {
  json examples = json::array();
  for (const auto& g : r.non_simple_irredundant) examples.push_back(to_json(g));
  return {{"parts", {r.a, r.b}},
          {"orientations_checked", r.orientations_checked},
          {"irredundant_count", r.irredundant_count},
          {"non_simple_count", r.non_simple_count},
          {"double_edge_count", r.double_edge_count},
          {"long_path_checked", r.long_path_checked},
          {"long_path_count", r.long_path_count},
          {"non_simple_irredundant", std::move(examples)},
          {"examples_truncated", r.examples_truncated}};
}

json to_json(const BoundTable& t) {
  json rows = json::array();
  for (std::size_t n = 1; n <= t.max_n(); ++n) {
    json terms = json::array();
    if (n >= 3) {
      if (t.attained[n].double_edge) terms.push_back("f(n-1)+2");
      if (t.attained[n].triangle) terms.push_back("f(n-2)+3");
      if (t.attained[n].mantel) terms.push_back("floor(n^2/4)");
    }
    rows.push_back({{"n", n}, {"bound", t.values[n]}, {"closed_form", f_closed_form(n)}, {"attained_by", terms}});
  }
  return rows;
}

json make_report(const std::string& command, const std::optional<Digraph>& input, json result,
                 std::optional<double> seconds) {
  json summary = nullptr;
  if (input) summary = {{"n", input->vertex_count()}, {"edge_count", input->edge_count()}};
  json timing = nullptr;
  if (seconds) timing = {{"wall_seconds", *seconds}};
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"input_summary", std::move(summary)},
          {"result", std::move(result)},
          {"timing", std::move(timing)}};
}

namespace {

void require(std::vector<std::string>& errs, const json& obj, const char* key, json::value_t type,
             const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    errs.push_back(where + ": missing '" + key + "'");
    return;
  }
  const json& v = obj.at(key);
  const bool ok = type == json::value_t::number_unsigned ? v.is_number_unsigned()
                  : type == json::value_t::number_float  ? v.is_number()
                                                         : v.type() == type;
  if (!ok) errs.push_back(where + ": '" + key + "' has the wrong type");
}

void require_graph(std::vector<std::string>& errs, const json& g, const std::string& where) {
  require(errs, g, "n", json::value_t::number_unsigned, where);
  require(errs, g, "edges", json::value_t::array, where);
  if (!g.is_object() || !g.contains("edges") || !g["edges"].is_array()) return;
  for (const auto& e : g["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      errs.push_back(where + ": malformed edge");
      return;
    }
  }
}

}  // namespace

std::vector<std::string> report_schema_violations(const json& report) {
  using vt = json::value_t;
  std::vector<std::string> errs;
  if (!report.is_object()) return {"report is not an object"};
  require(errs, report, "schema_version", vt::string, "report");
  require(errs, report, "command", vt::string, "report");
  require(errs, report, "result", vt::object, "report");
  if (!report.contains("input_summary")) errs.push_back("report: missing 'input_summary'");
  if (!report.contains("timing")) errs.push_back("report: missing 'timing'");
  if (!errs.empty()) return errs;
  if (report["schema_version"] != kSchemaVersion) errs.push_back("report: unknown schema_version");
  const auto& summary = report["input_summary"];
  if (!summary.is_null()) {
    require(errs, summary, "n", vt::number_unsigned, "input_summary");
    require(errs, summary, "edge_count", vt::number_unsigned, "input_summary");
  }
  if (!report["timing"].is_null()) require(errs, report["timing"], "wall_seconds", vt::number_float, "timing");

  const std::string cmd = report["command"];
  const json& r = report["result"];
  if (cmd == "check") {
    require(errs, r, "is_irredundant", vt::boolean, "result");
    require(errs, r, "bad_edges", vt::array, "result");
    if (r.contains("bad_edges") && r["bad_edges"].is_array()) {
      for (const auto& b : r["bad_edges"]) {
        require(errs, b, "edge", vt::array, "bad_edge");
        require(errs, b, "witness_path", vt::array, "bad_edge");
      }
    }
  } else if (cmd == "reduce") {
    require(errs, r, "steps", vt::array, "result");
    if (r.contains("steps") && r["steps"].is_array()) {
      for (const auto& s : r["steps"]) {
        require(errs, s, "kind", vt::string, "step");
        require(errs, s, "cycle", vt::array, "step");
        require(errs, s, "merged_vertex", vt::number_unsigned, "step");
        require(errs, s, "vertex_map", vt::array, "step");
        require(errs, s, "edges_before", vt::number_unsigned, "step");
        require(errs, s, "edges_after", vt::number_unsigned, "step");
      }
    }
  } else if (cmd == "search") {
    for (const char* k : {"n", "f_value", "extremal_class_count", "labeled_extremal_count", "nodes_expanded"}) {
      require(errs, r, k, vt::number_unsigned, "result");
    }
    require(errs, r, "partial", vt::boolean, "result");
    require(errs, r, "extremal_representatives", vt::array, "result");
    if (r.contains("extremal_representatives") && r["extremal_representatives"].is_array()) {
      for (const auto& g : r["extremal_representatives"]) require_graph(errs, g, "representative");
    }
  } else if (cmd == "verify") {
    require(errs, r, "suite", vt::string, "result");
    require(errs, r, "verdict", vt::string, "result");
    require(errs, r, "checks", vt::array, "result");
  } else if (cmd == "enumerate") {
    require(errs, r, "classes", vt::array, "result");
  } else {
    errs.push_back("report: unknown command '" + cmd + "'");
  }
  return errs;
}

bool witnesses_reverify(const json& report, const Digraph& g) {
  for (const auto& b : report.at("result").at("bad_edges")) {
    BadEdgeWitness w;
    w.edge = {b.at("edge")[0].get<Vertex>(), b.at("edge")[1].get<Vertex>()};
    w.alternate_path = b.at("witness_path").get<Path>();
    if (!witness_is_valid(g, w)) return false;
  }
  return true;
}

}  // namespace irr
