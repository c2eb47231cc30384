#include "irr/irredundance.hpp"

namespace irr {

std::optional<BadEdgeWitness> bad_edge_witness(const Digraph& g, const Edge& e) {
  auto path = reaches_avoiding_edge(g, e.from, e.to, e);
  if (!path) return std::nullopt;
  return BadEdgeWitness{e, std::move(*path)};
}

IrredundanceReport check(const Digraph& g) {
  IrredundanceReport r;
  for (const Edge& e : g.edges()) {
    if (auto w = bad_edge_witness(g, e)) r.bad_edges.push_back(std::move(*w));
  }
  r.is_irredundant = r.bad_edges.empty();
  return r;
}

bool witness_is_valid(const Digraph& g, const BadEdgeWitness& w) {
  const Path& p = w.alternate_path;
  if (p.size() < 3 || p.front() != w.edge.from || p.back() != w.edge.to) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const Edge step{p[i], p[i + 1]};
    if (step == w.edge || !g.has_edge(step)) return false;
  }
  return true;
}

namespace {

// Vertices reachable from `start` in g with `skip` removed and `extra` added.
std::vector<bool> reach_from(const Digraph& g, Vertex start, const Edge& skip, const Edge& extra) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  auto visit = [&](Vertex x, Vertex y) {
    if (seen[y] || (x == skip.from && y == skip.to)) return;
    seen[y] = true;
    stack.push_back(y);
  };
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.out_neighbors(x)) visit(x, y);
    if (x == extra.from) visit(x, extra.to);
  }
  return seen;
}

}  // namespace

bool extend_keeps_irredundant(const Digraph& g, const ReachabilityMatrix& reach, const Edge& e) {
  const std::size_t n = g.vertex_count();
  if (e.from >= n || e.to >= n || e.from == e.to) {
    throw GraphError("candidate " + to_string(e) + " is not a valid edge");
  }
  if (g.has_edge(e)) throw GraphError("candidate " + to_string(e) + " is already an edge");
  if (reach.size() != n) throw GraphError("reachability matrix does not match the graph");

  // The new edge is itself bad.
  if (reach(e.from, e.to)) return false;

  // An existing edge (x,y) turns bad only through a path x ~> u -> v ~> y.
  for (const Edge& xy : g.edges()) {
    if (!reach(xy.from, e.from) || !reach(e.to, xy.to)) continue;
    if (reach_from(g, xy.from, xy, e)[xy.to]) return false;
  }
  return true;
}

}  // namespace irr
