#include <doctest.h>

#include <random>
#include <set>

#include "irr/constructors.hpp"
#include "irr/digraph.hpp"
#include "oracles.hpp"

using namespace irr;

namespace {

const Digraph kPath3 = Digraph::build(3, {{0, 1}, {1, 2}});
const Digraph kCycle3 = Digraph::build(3, {{0, 1}, {1, 2}, {2, 0}});

}  // namespace

TEST_CASE("build keeps exactly the given edges") {
  const Digraph d = Digraph::build(2, {{0, 1}, {1, 0}});
  CHECK(d.edge_count() == 2);
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(1, 0));

  const Digraph single = Digraph::build(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  const Digraph dup = Digraph::build(3, {{0, 1}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("build rejects loops and out-of-range vertices") {
  CHECK_THROWS_WITH_AS(Digraph::build(3, {{1, 1}}), doctest::Contains("(1,1)"), GraphError);
  CHECK_THROWS_AS(Digraph::build(2, {{0, 2}}), GraphError);
}

TEST_CASE("in rows mirror out rows") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Digraph g = oracle::random_digraph(rng, 1 + trial % 12, 0.3);
    std::size_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      CHECK_FALSE(g.has_edge(u, u));
      total += g.out_degree(u);
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.out_rows().test(u, v) == g.in_rows().test(v, u));
    }
    CHECK(total == g.edge_count());
  }
}

TEST_CASE("multi-word rows beyond 64 vertices") {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < 150; ++v) es.push_back({v, v + 1});
  const Digraph g = Digraph::build(150, es);
  const auto r = reachability(g);
  CHECK(r(0, 149));
  CHECK_FALSE(r(149, 0));
  CHECK(r(70, 130));
  CHECK(g.without_edge({100, 101}).edge_count() == 148);
}

TEST_CASE("reachability examples") {
  const auto p = reachability(kPath3);
  CHECK(p(0, 2));
  CHECK_FALSE(p(2, 0));

  const auto c = reachability(kCycle3);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) CHECK(c(u, v));
  }

  const auto e = reachability(Digraph::build(3, {}));
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) CHECK(e(u, v) == (u == v));
  }
}

TEST_CASE("reachability matches the per-pair DFS oracle and is transitive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Digraph g = oracle::random_digraph(rng, n, trial % 2 ? 0.15 : 0.35);
    const auto r = reachability(g);
    const auto m = oracle::matrix_of(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(r(u, v) == oracle::dfs_reaches(m, u, v));
        if (g.has_edge(u, v)) CHECK(r(u, v));
        for (Vertex w = 0; w < n; ++w) {
          if (r(u, v) && r(v, w)) CHECK(r(u, w));
        }
      }
    }
  }
}

TEST_CASE("reaches_avoiding_edge examples") {
  const Digraph tri = Digraph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(reaches_avoiding_edge(tri, 0, 2, {0, 2}) == Path{0, 1, 2});

  const Digraph dbl = Digraph::build(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(reaches_avoiding_edge(dbl, 0, 1, {0, 1}).has_value());

  // Exhaustive path check: the only simple 0 -> 1 path in the 3-cycle is the edge.
  const auto paths = oracle::all_simple_paths(oracle::matrix_of(kCycle3), 0, 1);
  REQUIRE(paths.size() == 1);
  CHECK_FALSE(reaches_avoiding_edge(kCycle3, 0, 1, {0, 1}).has_value());

  CHECK_THROWS_AS(reaches_avoiding_edge(kPath3, 0, 2, {0, 2}), GraphError);
}

TEST_CASE("reaches_avoiding_edge prefers shortest then smallest labels") {
  // Two shortest routes 0->1->4 and 0->2->4, plus a longer 0->3->5->4.
  const Digraph g = Digraph::build(6, {{0, 4}, {0, 2}, {0, 1}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {5, 4}});
  CHECK(reaches_avoiding_edge(g, 0, 4, {0, 4}) == Path{0, 1, 4});
}

TEST_CASE("reaches_avoiding_edge agrees with DFS on every edge of random graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 8;
    const Digraph g = oracle::random_digraph(rng, n, 0.25);
    const auto m = oracle::matrix_of(g);
    for (const Edge& e : g.edges()) {
      const auto path = reaches_avoiding_edge(g, e.from, e.to, e);
      const bool oracle_reach = oracle::dfs_reaches(m, e.from, e.to, e.from, e.to);
      REQUIRE(path.has_value() == oracle_reach);
      CHECK(path.has_value() == reachability(g.without_edge(e))(e.from, e.to));
      if (path) {
        CHECK(path->front() == e.from);
        CHECK(path->back() == e.to);
        for (std::size_t i = 0; i + 1 < path->size(); ++i) {
          const Edge step{(*path)[i], (*path)[i + 1]};
          CHECK(g.has_edge(step));
          CHECK(step != e);
        }
      }
    }
  }
}

TEST_CASE("underlying undirected edges") {
  CHECK(underlying_undirected_edges(Digraph::build(2, {{0, 1}, {1, 0}})).size() == 1);
  CHECK(underlying_undirected_edges(kCycle3).size() == 3);
  CHECK(underlying_undirected_edges(Digraph::build(4, {})).empty());
}

TEST_CASE("find_triangle") {
  CHECK(find_triangle(kCycle3) == std::array<Vertex, 3>{0, 1, 2});
  CHECK_FALSE(find_triangle(oriented_complete_bipartite(3, 4)).has_value());
  const Digraph g = Digraph::build(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK(find_triangle(g) == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("find_double_edge") {
  CHECK(find_double_edge(Digraph::build(3, {{0, 1}, {1, 0}, {1, 2}})) == std::pair<Vertex, Vertex>{0, 1});
  CHECK_FALSE(find_double_edge(kCycle3).has_value());
  CHECK_FALSE(find_double_edge(Digraph::build(3, {})).has_value());
}

TEST_CASE("mantel_bound_check") {
  const auto k34 = mantel_bound_check(oriented_complete_bipartite(3, 4));
  CHECK(k34.triangle_free);
  CHECK(k34.undirected_edges == 12);
  CHECK(k34.bound == 12);
  CHECK_FALSE(k34.violation);

  const auto k44 = mantel_bound_check(oriented_complete_bipartite(4, 4));
  CHECK(k44.triangle_free);
  CHECK(k44.undirected_edges == 16);
  CHECK(k44.bound == 16);

  CHECK_FALSE(mantel_bound_check(kCycle3).triangle_free);
}

TEST_CASE("mantel bound never violated on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph g = oracle::random_digraph(rng, 1 + trial % 9, 0.1 + 0.05 * (trial % 8));
    CHECK_FALSE(mantel_bound_check(g).violation);
  }
}

TEST_CASE("canonical code examples") {
  const Digraph t1 = double_tree(4, std::vector<UndirectedEdge>{{0, 1}, {1, 2}, {2, 3}});
  const Digraph t2 = double_tree(4, std::vector<UndirectedEdge>{{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_code(t1) == canonical_code(t2));

  CHECK(canonical_code(Digraph::build(2, {{0, 1}, {1, 0}})) != canonical_code(Digraph::build(2, {{0, 1}})));
  CHECK(canonical_code(kPath3) == canonical_code(Digraph::build(3, {{2, 1}, {1, 0}})));
  CHECK_THROWS_AS(canonical_code(Digraph::build(11, {})), GraphError);
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Digraph g = oracle::random_digraph(rng, n, 0.3);
    const auto code = canonical_code(g);
    CHECK(decode(code).edge_count() == g.edge_count());
    CHECK(oracle::isomorphic(decode(code), g));
    for (int k = 0; k < 50; ++k) {
      REQUIRE(canonical_code(oracle::relabel(g, oracle::random_permutation(rng, n))) == code);
    }
  }
}

TEST_CASE("canonical code separates all digraphs on three vertices") {
  // Pilot set: one representative per class, deduplicated by brute-force isomorphism.
  std::vector<Digraph> reps;
  oracle::for_each_digraph(3, [&](const Digraph& g) {
    for (const auto& r : reps) {
      if (oracle::isomorphic(r, g)) return;
    }
    reps.push_back(g);
  });
  CHECK(reps.size() == 16);  // digraphs on 3 unlabeled vertices
  std::set<CanonicalCode> codes;
  for (const auto& r : reps) codes.insert(canonical_code(r));
  CHECK(codes.size() == reps.size());
}
