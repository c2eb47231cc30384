#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irr {

using Vertex = std::uint32_t;

/// Ordered vertex pair (from, to).
struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered vertex pair, stored with lo < hi.
struct UndirectedEdge {
  Vertex lo = 0;
  Vertex hi = 0;

  friend auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

using Path = std::vector<Vertex>;

/// Raised for malformed graphs and violated operation preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Edge& e);

/// Square bit matrix with one multi-word row per vertex.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  void reset(std::size_t r, std::size_t c) noexcept {
    data_[r * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
  }

  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t r) noexcept {
    return {data_.data() + r * words_, words_};
  }

  /// dst |= src, returns true if dst changed.
  bool or_row_into(std::size_t dst, std::size_t src) noexcept;
  std::size_t row_count(std::size_t r) const noexcept;
  std::size_t count() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Loop-free directed graph on vertices 0..n-1 with mirrored out/in rows.
/// Immutable after construction; edits return new graphs.
class Digraph {
 public:
  Digraph() = default;

  /// Throws GraphError on loops or out-of-range endpoints. Duplicates collapse.
  static Digraph build(std::size_t n, std::span<const Edge> edges);
  static Digraph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return u < n_ && v < n_ && out_.test(u, v);
  }
  bool has_edge(const Edge& e) const noexcept { return has_edge(e.from, e.to); }

  const BitMatrix& out_rows() const noexcept { return out_; }
  const BitMatrix& in_rows() const noexcept { return in_; }

  std::size_t out_degree(Vertex v) const noexcept { return out_.row_count(v); }
  std::size_t in_degree(Vertex v) const noexcept { return in_.row_count(v); }

  std::vector<Vertex> out_neighbors(Vertex v) const;
  std::vector<Vertex> in_neighbors(Vertex v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  Digraph with_edge(const Edge& e) const;
  Digraph without_edge(const Edge& e) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  BitMatrix out_;
  BitMatrix in_;
};

/// reach(u, v) is true iff a (possibly empty) directed path leads from u to v.
class ReachabilityMatrix {
 public:
  ReachabilityMatrix() = default;
  explicit ReachabilityMatrix(BitMatrix m) : m_(std::move(m)) {}

  std::size_t size() const noexcept { return m_.size(); }
  bool operator()(Vertex u, Vertex v) const noexcept { return m_.test(u, v); }
  const BitMatrix& bits() const noexcept { return m_; }

  friend bool operator==(const ReachabilityMatrix&, const ReachabilityMatrix&) = default;

 private:
  BitMatrix m_;
};

/// Transitive-reflexive closure by repeated bit-row unioning.
ReachabilityMatrix reachability(const Digraph& g);

/// Shortest u->v path in g without edge `skip`; BFS visits out-neighbours in
/// increasing label order. Throws if `skip` is not an edge of g.
std::optional<Path> reaches_avoiding_edge(const Digraph& g, Vertex u, Vertex v, const Edge& skip);

std::vector<UndirectedEdge> underlying_undirected_edges(const Digraph& g);

/// Lexicographically smallest triangle of the underlying undirected graph.
std::optional<std::array<Vertex, 3>> find_triangle(const Digraph& g);

/// Lexicographically smallest pair u < v with both (u,v) and (v,u) present.
std::optional<std::pair<Vertex, Vertex>> find_double_edge(const Digraph& g);

struct MantelCheck {
  bool triangle_free = false;
  std::size_t undirected_edges = 0;
  std::size_t bound = 0;
  /// Triangle-free but over the bound. Never expected.
  bool violation = false;
};

MantelCheck mantel_bound_check(const Digraph& g);

inline constexpr std::size_t kDefaultCanonicalLimit = 10;

/// Adjacency matrix of a canonical relabeling, row-major, packed MSB-first.
struct CanonicalCode {
  std::size_t n = 0;
  std::vector<std::uint8_t> code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Minimum adjacency bit string over all relabelings that list vertices in
/// nondecreasing (out-degree, in-degree) order.
CanonicalCode canonical_code(const Digraph& g, std::size_t limit = kDefaultCanonicalLimit);

/// Rebuilds the canonical representative a code describes.
Digraph decode(const CanonicalCode& c);

std::string to_hex(const CanonicalCode& c);

}  // namespace irr
