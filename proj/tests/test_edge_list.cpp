#include <doctest.h>

#include <random>

#include "irr/constructors.hpp"
#include "irr/edge_list.hpp"
#include "irr/irredundance.hpp"
#include "irr/reduction.hpp"
#include "irr/report.hpp"
#include "oracles.hpp"

using namespace irr;

TEST_CASE("parse_edge_list") {
  const Digraph g = parse_edge_list("# a comment\nn 3\n0 1\n\n1 2\n# trailing\n");
  CHECK(g == Digraph::build(3, {{0, 1}, {1, 2}}));
  CHECK(parse_edge_list("n 1\n").vertex_count() == 1);
  CHECK(parse_edge_list("n 2\n0 1\n1 0").edge_count() == 2);
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_edge_list("n 2\n0 2\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 2\n0 2\n"), doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("n 3\n0 1\n2 2\n"), doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  try {
    parse_edge_list("n 4\n\n# c\n1 9\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("serialize then parse is the identity") {
  CHECK(serialize_edge_list(Digraph::build(3, {{1, 2}, {0, 1}})) == "n 3\n0 1\n1 2\n");
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph g = oracle::random_digraph(rng, 1 + trial % 20, 0.2);
    const std::string text = serialize_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(serialize_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("parse_tree_edge_list") {
  const auto [n, edges] = parse_tree_edge_list("n 4\n0 1\n1 2\n3 1\n");
  CHECK(n == 4);
  CHECK(double_tree(n, edges) == double_tree(4, std::vector<UndirectedEdge>{{0, 1}, {1, 2}, {1, 3}}));
}

TEST_CASE("parse_dot agrees with the edge-list format") {
  const auto d = parse_dot("digraph G {\n  a -> b;\n  b -> c -> a\n  d;\n}\n");
  CHECK(d.names == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(d.graph == parse_edge_list("n 4\n0 1\n1 2\n2 0\n"));

  const auto q = parse_dot("digraph { \"x y\" -> z; // note\n /* block\n comment */ z -> \"x y\" }");
  CHECK(q.names == std::vector<std::string>{"x y", "z"});
  CHECK(q.graph == Digraph::build(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("parse_dot rejections") {
  CHECK_THROWS_AS(parse_dot("graph { a -- b }"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph { a -- b }"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph { a -> b [color=red] }"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph { subgraph s { a } }"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph { a -> a }"), ParseError);
  CHECK_THROWS_AS(parse_dot("digraph { a -> b"), ParseError);
  CHECK_THROWS_WITH_AS(parse_dot("digraph {\n a -> b\n c -> }"), doctest::Contains("line 3"), ParseError);
}

TEST_CASE("generated reports conform to the schema") {
  const Digraph bad = Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  const json check_report = make_report("check", bad, to_json(check(bad)), 0.25);
  CHECK(report_schema_violations(check_report).empty());
  CHECK(witnesses_reverify(check_report, bad));

  const Digraph dt = double_tree(4, path_tree(4));
  const json reduce_report = make_report("reduce", dt, to_json(reduce_fully(dt)), std::nullopt);
  CHECK(report_schema_violations(reduce_report).empty());
  CHECK(reduce_report["result"]["steps"].size() == 3);
  CHECK(reduce_report["timing"].is_null());

  const json search_report = make_report("search", std::nullopt, to_json(max_irredundant(4)), std::nullopt);
  CHECK(report_schema_violations(search_report).empty());
  CHECK(search_report["result"]["f_value"] == 6);
}

TEST_CASE("schema violations are reported") {
  CHECK_FALSE(report_schema_violations(json::array()).empty());
  json r = make_report("check", std::nullopt, {{"is_irredundant", true}}, std::nullopt);
  CHECK_FALSE(report_schema_violations(r).empty());
  r["result"]["bad_edges"] = json::array();
  CHECK(report_schema_violations(r).empty());
  r["command"] = "nope";
  CHECK_FALSE(report_schema_violations(r).empty());
}

TEST_CASE("tampered witnesses fail to reverify") {
  const Digraph bad = Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  json report = make_report("check", bad, to_json(check(bad)), std::nullopt);
  report["result"]["bad_edges"][0]["witness_path"] = {0, 2};
  CHECK_FALSE(witnesses_reverify(report, bad));
}
