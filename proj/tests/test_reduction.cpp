#include <doctest.h>

#include <random>

#include "irr/constructors.hpp"
#include "irr/irredundance.hpp"
#include "irr/reduction.hpp"
#include "oracles.hpp"

using namespace irr;

namespace {

// Hand contraction of the cycle, independent of the library's relabeling code.
Digraph hand_contract(const Digraph& g, const std::vector<Vertex>& cycle) {
  const Vertex merged = *std::min_element(cycle.begin(), cycle.end());
  auto in_cycle = [&](Vertex v) { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); };
  std::vector<Vertex> map(g.vertex_count());
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_cycle(v) || v == merged) map[v] = next++;
  }
  for (Vertex c : cycle) map[c] = map[merged];
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (map[e.from] != map[e.to]) es.push_back({map[e.from], map[e.to]});
  }
  return Digraph::build(next, es);
}

}  // namespace

TEST_CASE("contract_double_edge examples") {
  const Digraph g = Digraph::build(3, {{0, 1}, {1, 0}, {2, 0}});
  const auto out = contract_double_edge(g, 0, 1);
  CHECK(out.contracted == Digraph::build(2, {{1, 0}}));
  CHECK(out.merged_vertex == 0);
  CHECK(out.vertex_map == std::vector<Vertex>{0, 0, 1});
  CHECK(out.contracted == hand_contract(g, {0, 1}));
  CHECK(out.contracted.edge_count() + 2 == g.edge_count());
  CHECK(check(out.contracted).is_irredundant);

  const auto single = contract_double_edge(Digraph::build(2, {{0, 1}, {1, 0}}), 1, 0);
  CHECK(single.contracted.vertex_count() == 1);
  CHECK(single.contracted.edge_count() == 0);

  const Digraph dt = double_tree(3, path_tree(3));
  for (const auto& [u, v] : {std::pair<Vertex, Vertex>{0, 1}, {1, 2}}) {
    const auto step = contract_double_edge(dt, u, v);
    CHECK(step.contracted == Digraph::build(2, {{0, 1}, {1, 0}}));
    CHECK(check(step.contracted).is_irredundant);
  }
}

TEST_CASE("contract_double_edge rejections") {
  CHECK_THROWS_AS(contract_double_edge(Digraph::build(2, {{0, 1}}), 0, 1), GraphError);
  // Redundant: (2,1) is bad through 2 -> 0 -> 1.
  CHECK_THROWS_AS(contract_double_edge(Digraph::build(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}}), 0, 1), GraphError);
  CHECK_THROWS_AS(contract_double_edge(Digraph::build(2, {{0, 1}, {1, 0}}), 0, 5), GraphError);
}

TEST_CASE("contract_triangle examples") {
  const auto single = contract_triangle(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}), 0, 1, 2);
  CHECK(single.contracted.vertex_count() == 1);
  CHECK(single.contracted.edge_count() == 0);

  const Digraph in_edge = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const auto a = contract_triangle(in_edge, 0, 1, 2);
  CHECK(a.contracted == Digraph::build(2, {{1, 0}}));
  CHECK(a.contracted == hand_contract(in_edge, {0, 1, 2}));
  CHECK(check(a.contracted).is_irredundant);

  const Digraph out_edge = Digraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const auto b = contract_triangle(out_edge, 2, 0, 1);
  CHECK(b.contracted == Digraph::build(2, {{0, 1}}));
  CHECK(b.contracted.edge_count() + 3 == out_edge.edge_count());
}

TEST_CASE("contract_triangle rejections") {
  CHECK_THROWS_AS(contract_triangle(Digraph::build(3, {{0, 1}, {1, 2}}), 0, 1, 2), GraphError);
  CHECK_THROWS_AS(contract_triangle(Digraph::build(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}), 0, 1, 2), GraphError);
  // Transitive triangle is redundant.
  CHECK_THROWS_AS(contract_triangle(Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 1, 2), GraphError);
}

TEST_CASE("reduce_fully examples") {
  const auto dt = reduce_fully(double_tree(5, path_tree(5)));
  REQUIRE(dt.size() == 4);
  for (const auto& step : dt) CHECK(step.kind == CycleKind::DoubleEdge);
  CHECK(dt.back().contracted.vertex_count() == 1);

  CHECK(reduce_fully(oriented_complete_bipartite(3, 4)).empty());

  const auto tri = reduce_fully(Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}}));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].kind == CycleKind::Triangle);
  CHECK(tri[0].contracted.vertex_count() == 1);
}

TEST_CASE("contractions on grown irredundant graphs") {
  std::mt19937_64 rng(41);
  int doubles = 0;
  int triangles = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Digraph g = oracle::grow_irredundant(rng, n, 5 + trial % 30);
    Digraph current = g;
    for (const auto& step : reduce_fully(g)) {
      const std::size_t drop = step.kind == CycleKind::DoubleEdge ? 2 : 3;
      CHECK(step.contracted.edge_count() + drop == current.edge_count());
      CHECK(oracle::irredundant_by_avoidance(step.contracted));
      CHECK(step.contracted == hand_contract(current, step.cycle));
      (step.kind == CycleKind::DoubleEdge ? doubles : triangles) += 1;
      current = step.contracted;
    }
    CHECK_FALSE(find_double_edge(current).has_value());
    CHECK_FALSE(find_triangle(current).has_value());
  }
  CHECK(doubles > 0);
  CHECK(triangles > 0);
}

TEST_CASE("exclusivity claims and directed triangles in irredundant graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const Digraph g = oracle::grow_irredundant(rng, n, 30);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!(g.has_edge(u, v) && g.has_edge(v, u))) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          CHECK_FALSE((g.has_edge(w, u) && g.has_edge(w, v)));
          CHECK_FALSE((g.has_edge(u, w) && g.has_edge(v, w)));
        }
      }
    }
    if (!find_double_edge(g)) {
      if (auto t = find_triangle(g)) {
        const auto [a, b, c] = *t;
        const bool cyclic = (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, a)) ||
                            (g.has_edge(b, a) && g.has_edge(c, b) && g.has_edge(a, c));
        CHECK(cyclic);
      }
    }
  }
}

TEST_CASE("recurrence bound") {
  const auto t = recurrence_bound(100);
  CHECK(t[1] == 0);
  CHECK(t[2] == 2);
  CHECK(t[7] == 12);
  CHECK(t.attained[7].double_edge);
  CHECK(t.attained[7].mantel);
  CHECK_FALSE(t.attained[7].triangle);
  CHECK(t[8] == 16);
  CHECK(t.attained[8].mantel);
  CHECK_FALSE(t.attained[8].double_edge);
  CHECK_FALSE(t.attained[8].triangle);
  for (std::size_t n = 1; n <= 100; ++n) {
    CHECK(t[n] == (n <= 7 ? 2 * n - 2 : n * n / 4));
    CHECK(t[n] == f_closed_form(n));
  }
  for (std::size_t n = 7; n + 2 <= 100; ++n) CHECK((n + 2) * (n + 2) / 4 >= (n + 1) * (n + 1) / 4 + 2);
  CHECK_THROWS_AS(recurrence_bound(1), GraphError);
}
