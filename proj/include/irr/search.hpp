#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "irr/constructors.hpp"
#include "irr/digraph.hpp"

namespace irr {

inline constexpr std::size_t kMaxSearchN = 8;
inline constexpr std::size_t kMaxEnumerateN = 6;
inline constexpr std::size_t kMaxSweepPairs = 16;

struct SearchOptions {
  /// Zero means unlimited.
  std::chrono::milliseconds budget{0};
  /// Edge-count bounds (constructive seed, remaining candidates, recurrence
  /// cap). Off means every irredundant edge set is visited.
  bool pruning = true;
  /// OpenMP workers; 0 uses the runtime default. Ignored by the serial path.
  int jobs = 0;
};

struct PruneCounts {
  std::uint64_t candidate_bound = 0;  // current + addable candidates below target
  std::uint64_t recurrence_cap = 0;   // adding would exceed the recurrence table
};

struct SearchReport {
  std::size_t n = 0;
  std::size_t f_value = 0;
  /// Sorted, one per isomorphism class of maximum irredundant graphs.
  std::vector<CanonicalCode> extremal_codes;
  std::uint64_t labeled_extremal = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t leaves = 0;
  PruneCounts prune_counts;
  std::chrono::duration<double> wall_time{0};
  /// Budget ran out: f_value is only a lower bound and the class set may be incomplete.
  bool partial = false;
  int workers = 1;

  /// Identical results, ignoring timing, counters and worker count.
  bool same_result(const SearchReport& o) const {
    return n == o.n && f_value == o.f_value && extremal_codes == o.extremal_codes &&
           labeled_extremal == o.labeled_extremal && partial == o.partial;
  }
};

/// Exact f(n) and all extremal classes, 1 <= n <= 8. OpenMP over subtrees.
SearchReport max_irredundant(std::size_t n, const SearchOptions& options = {});

/// Single-threaded reference for max_irredundant.
SearchReport max_irredundant_serial(std::size_t n, const SearchOptions& options = {});

/// Irredundant graphs on n <= 6 vertices with at least min_edges edges, one
/// canonical representative per class, in canonical-code order.
std::vector<CanonicalCode> enumerate_irredundant(std::size_t n, std::size_t min_edges);

struct TheoremVerdict {
  std::size_t n = 0;
  std::size_t f_found = 0;
  std::size_t f_expected = 0;
  bool f_matches = false;
  std::size_t double_tree_classes = 0;
  std::size_t bipartite_classes = 0;
  std::size_t other_classes = 0;
  /// Every representative falls in a family allowed at this n.
  bool characterization_holds = false;
  /// Every double tree (n <= 7) and the balanced bipartite graphs (n >= 7) were found.
  bool families_complete = false;
  std::vector<CanonicalCode> unexpected;  // representatives outside the allowed families
  SearchReport search;

  bool pass() const { return f_matches && characterization_holds && families_complete && !search.partial; }
};

std::vector<TheoremVerdict> verify_theorem(std::size_t n_max, const SearchOptions& options = {});

struct BipartiteSweepReport {
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t orientations_checked = 0;
  std::uint64_t irredundant_count = 0;
  /// Irredundant, but not all edges running one way between the parts.
  std::uint64_t non_simple_count = 0;
  /// Irredundant and containing a double edge.
  std::uint64_t double_edge_count = 0;
  /// Irredundant orientations with a directed path on four distinct vertices
  /// (only examined when both parts have at least three vertices).
  std::uint64_t long_path_count = 0;
  bool long_path_checked = false;
  /// The first kMaxSweepExamples non-simple irredundant orientations, in sweep order.
  std::vector<Digraph> non_simple_irredundant;
  bool examples_truncated = false;
};

inline constexpr std::size_t kMaxSweepExamples = 1000;

/// Every forward/backward/double assignment on K_{a,b}; requires a*b <= 16.
BipartiteSweepReport verify_bipartite_simplicity(std::size_t a, std::size_t b);

/// Same sweep through the public Digraph API, one orientation at a time.
BipartiteSweepReport verify_bipartite_simplicity_serial(std::size_t a, std::size_t b);

/// The assignment with index `code` (base 3, pair (i,j) in row-major order,
/// digit 0 = U->V, 1 = V->U, 2 = both).
Digraph bipartite_orientation(std::size_t a, std::size_t b, std::uint64_t code);

}  // namespace irr
