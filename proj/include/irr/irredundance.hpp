#pragma once

#include <optional>
#include <vector>

#include "irr/digraph.hpp"

namespace irr {

/// A bad edge together with the alternate x -> y path that makes it bad.
struct BadEdgeWitness {
  Edge edge;
  Path alternate_path;

  friend bool operator==(const BadEdgeWitness&, const BadEdgeWitness&) = default;
};

struct IrredundanceReport {
  bool is_irredundant = true;
  std::vector<BadEdgeWitness> bad_edges;
};

/// Present iff `e` is bad in g. Throws GraphError if e is not an edge of g.
std::optional<BadEdgeWitness> bad_edge_witness(const Digraph& g, const Edge& e);

/// Reports every bad edge of g, in edge order.
IrredundanceReport check(const Digraph& g);

inline bool is_irredundant(const Digraph& g) { return check(g).is_irredundant; }

/// True iff the witness is a genuine alternate path in g: starts at the edge's
/// tail, ends at its head, has at least two steps, and every step is an edge
/// of g other than the witnessed one.
bool witness_is_valid(const Digraph& g, const BadEdgeWitness& w);

/// Whether g + e stays irredundant, given irredundant g and its closure.
/// Throws GraphError if e is already present or is a loop.
bool extend_keeps_irredundant(const Digraph& g, const ReachabilityMatrix& reach, const Edge& e);

}  // namespace irr
