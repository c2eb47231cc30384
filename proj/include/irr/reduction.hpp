#pragma once

#include <cstddef>
#include <vector>

#include "irr/digraph.hpp"

namespace irr {

enum class CycleKind { DoubleEdge, Triangle };

const char* to_string(CycleKind k);

/// Result of merging a 2-cycle or directed 3-cycle into one vertex.
struct ContractionOutcome {
  CycleKind kind = CycleKind::DoubleEdge;
  std::vector<Vertex> cycle;  // contracted vertices, original labels
  Digraph contracted;
  Vertex merged_vertex = 0;
  std::vector<Vertex> vertex_map;  // old label -> new label
};

/// Merges the double edge {u,v}. Surviving vertices keep their relative
/// order and the merged vertex takes the smaller of u and v's positions.
/// Throws GraphError unless g is irredundant and (u,v),(v,u) are both edges.
ContractionOutcome contract_double_edge(const Digraph& g, Vertex u, Vertex v);

/// Merges the triangle {u1,u2,u3}, which in an irredundant graph without a
/// double edge among its vertices must be a directed 3-cycle.
ContractionOutcome contract_triangle(const Digraph& g, Vertex u1, Vertex u2, Vertex u3);

/// Contracts double edges first, then triangles, until neither remains.
std::vector<ContractionOutcome> reduce_fully(const Digraph& g);

/// Which terms of max{f(n-1)+2, f(n-2)+3, floor(n^2/4)} attain the maximum.
struct BoundTerms {
  bool double_edge = false;  // f(n-1) + 2
  bool triangle = false;     // f(n-2) + 3
  bool mantel = false;       // floor(n^2 / 4)
};

/// Upper bounds on f(n) for n = 1..N, indexed by n (entry 0 unused).
struct BoundTable {
  std::vector<std::size_t> values;
  std::vector<BoundTerms> attained;

  std::size_t max_n() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  std::size_t operator[](std::size_t n) const { return values.at(n); }
};

BoundTable recurrence_bound(std::size_t max_n);

/// 2n-2 for n <= 7, floor(n^2/4) from 7 on.
std::size_t f_closed_form(std::size_t n);

}  // namespace irr
