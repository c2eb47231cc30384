#include "irr/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "irr/irredundance.hpp"

namespace irr {

const char* to_string(CycleKind k) {
  return k == CycleKind::DoubleEdge ? "double_edge" : "triangle";
}

namespace {

void require_irredundant(const Digraph& g, const char* op) {
  const auto report = check(g);
  if (!report.is_irredundant) {
    throw GraphError(std::string(op) + ": input is not irredundant (bad edge " +
                     to_string(report.bad_edges.front().edge) + ")");
  }
}

void require_vertex(const Digraph& g, Vertex v) {
  if (v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

// Merges `cycle` into one vertex and checks that every outside vertex has at
// most one edge into and at most one edge out of the cycle.
ContractionOutcome merge(const Digraph& g, CycleKind kind, std::vector<Vertex> cycle) {
  std::sort(cycle.begin(), cycle.end());
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_cycle(n, false);
  for (Vertex c : cycle) in_cycle[c] = true;

  ContractionOutcome out;
  out.kind = kind;
  out.cycle = cycle;
  out.vertex_map.assign(n, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == cycle.front()) {
      out.merged_vertex = next++;
      out.vertex_map[v] = out.merged_vertex;
    } else if (!in_cycle[v]) {
      out.vertex_map[v] = next++;
    }
  }
  for (Vertex c : cycle) out.vertex_map[c] = out.merged_vertex;

  std::vector<Edge> edges;
  for (Vertex y = 0; y < n; ++y) {
    if (in_cycle[y]) continue;
    int to_cycle = 0;
    int from_cycle = 0;
    for (Vertex c : cycle) {
      to_cycle += g.has_edge(y, c) ? 1 : 0;
      from_cycle += g.has_edge(c, y) ? 1 : 0;
    }
    if (to_cycle > 1 || from_cycle > 1) {
      throw std::logic_error("contraction: vertex " + std::to_string(y) +
                             " has two edges to or from the cycle in an irredundant graph");
    }
    if (to_cycle == 1) edges.push_back({out.vertex_map[y], out.merged_vertex});
    if (from_cycle == 1) edges.push_back({out.merged_vertex, out.vertex_map[y]});
  }
  for (const Edge& e : g.edges()) {
    if (!in_cycle[e.from] && !in_cycle[e.to]) edges.push_back({out.vertex_map[e.from], out.vertex_map[e.to]});
  }
  out.contracted = Digraph::build(next, edges);

  const std::size_t drop = kind == CycleKind::DoubleEdge ? 2 : 3;
  if (out.contracted.edge_count() + drop != g.edge_count()) {
    throw std::logic_error("contraction: edge count did not drop by " + std::to_string(drop));
  }
  return out;
}

}  // namespace

ContractionOutcome contract_double_edge(const Digraph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v || !g.has_edge(u, v) || !g.has_edge(v, u)) {
    throw GraphError("contract_double_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                     "} is not a double edge");
  }
  require_irredundant(g, "contract_double_edge");
  return merge(g, CycleKind::DoubleEdge, {u, v});
}

ContractionOutcome contract_triangle(const Digraph& g, Vertex u1, Vertex u2, Vertex u3) {
  for (Vertex v : {u1, u2, u3}) require_vertex(g, v);
  const std::array<Vertex, 3> t{u1, u2, u3};
  auto adjacent = [&](Vertex a, Vertex b) { return g.has_edge(a, b) || g.has_edge(b, a); };
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex a = t[i];
    const Vertex b = t[(i + 1) % 3];
    if (a == b || !adjacent(a, b)) {
      throw GraphError("contract_triangle: {" + std::to_string(u1) + "," + std::to_string(u2) + "," +
                       std::to_string(u3) + "} is not a triangle");
    }
    if (g.has_edge(a, b) && g.has_edge(b, a)) {
      throw GraphError("contract_triangle: double edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} inside the triangle");
    }
  }
  require_irredundant(g, "contract_triangle");
  // Three single edges with no transitive shortcut must run around the cycle.
  const bool cyclic = (g.has_edge(u1, u2) && g.has_edge(u2, u3) && g.has_edge(u3, u1)) ||
                      (g.has_edge(u2, u1) && g.has_edge(u3, u2) && g.has_edge(u1, u3));
  if (!cyclic) throw std::logic_error("contract_triangle: irredundant triangle is not a directed cycle");
  return merge(g, CycleKind::Triangle, {u1, u2, u3});
}

std::vector<ContractionOutcome> reduce_fully(const Digraph& g) {
  require_irredundant(g, "reduce_fully");
  std::vector<ContractionOutcome> trace;
  Digraph current = g;
  while (true) {
    if (auto d = find_double_edge(current)) {
      trace.push_back(contract_double_edge(current, d->first, d->second));
    } else if (auto t = find_triangle(current)) {
      trace.push_back(contract_triangle(current, (*t)[0], (*t)[1], (*t)[2]));
    } else {
      break;
    }
    current = trace.back().contracted;
  }
  return trace;
}

BoundTable recurrence_bound(std::size_t max_n) {
  if (max_n < 2) throw GraphError("recurrence_bound: need N >= 2");
  BoundTable t;
  t.values.assign(max_n + 1, 0);
  t.attained.assign(max_n + 1, BoundTerms{});
  t.values[1] = 0;
  t.values[2] = 2;
  for (std::size_t n = 3; n <= max_n; ++n) {
    const std::size_t by_double = t.values[n - 1] + 2;
    const std::size_t by_triangle = t.values[n - 2] + 3;
    const std::size_t by_mantel = n * n / 4;
    const std::size_t best = std::max({by_double, by_triangle, by_mantel});
    t.values[n] = best;
    t.attained[n] = {by_double == best, by_triangle == best, by_mantel == best};
  }
  return t;
}

std::size_t f_closed_form(std::size_t n) {
  if (n == 0) return 0;
  return n <= 7 ? 2 * n - 2 : n * n / 4;
}

}  // namespace irr
