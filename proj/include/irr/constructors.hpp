#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "irr/digraph.hpp"

namespace irr {

/// Doubles every edge of the tree on vertices 0..n-1 given by `tree_edges`.
/// Throws GraphError naming the failure if the input is not a tree.
Digraph double_tree(std::size_t n, std::span<const UndirectedEdge> tree_edges);

/// Parts U = {0..a-1}, V = {a..a+b-1}, every edge directed U -> V.
Digraph oriented_complete_bipartite(std::size_t a, std::size_t b);

enum class ExtremalKind { DoubleTree, SimpleBalancedCompleteBipartite, Other };

const char* to_string(ExtremalKind k);

struct ExtremalClass {
  ExtremalKind kind = ExtremalKind::Other;
  std::vector<UndirectedEdge> tree_edges;  // DoubleTree only
  std::vector<Vertex> part_u;              // bipartite only: the sources
  std::vector<Vertex> part_v;              // bipartite only: the sinks
};

ExtremalClass classify_extremal(const Digraph& g);

/// Labeled tree for a Prüfer sequence over 0..n-1 (length n-2).
std::vector<UndirectedEdge> tree_from_pruefer(std::size_t n, std::span<const Vertex> seq);

/// A path 0-1-...-(n-1).
std::vector<UndirectedEdge> path_tree(std::size_t n);

/// Uniform random labeled tree (random Prüfer sequence).
std::vector<UndirectedEdge> random_tree(std::size_t n, std::uint64_t seed);

/// One double tree per isomorphism class, sorted by canonical code. 1 <= n <= 10.
std::vector<Digraph> all_double_trees(std::size_t n);

}  // namespace irr
