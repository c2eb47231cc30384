#include "irr/digraph.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <numeric>
#include <sstream>

namespace irr {

std::string to_string(const Edge& e) {
  std::ostringstream os;
  os << '(' << e.from << ',' << e.to << ')';
  return os.str();
}

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

bool BitMatrix::or_row_into(std::size_t dst, std::size_t src) noexcept {
  bool changed = false;
  std::uint64_t* d = data_.data() + dst * words_;
  const std::uint64_t* s = data_.data() + src * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    const std::uint64_t next = d[w] | s[w];
    changed |= next != d[w];
    d[w] = next;
  }
  return changed;
}

std::size_t BitMatrix::row_count(std::size_t r) const noexcept {
  std::size_t c = 0;
  for (auto w : row(r)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t c = 0;
  for (auto w : data_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

template <typename Fn>
void for_each_bit(std::span<const std::uint64_t> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
}

}  // namespace

Digraph Digraph::build(std::size_t n, std::span<const Edge> edges) {
  Digraph g;
  g.n_ = n;
  g.out_ = BitMatrix(n);
  g.in_ = BitMatrix(n);
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.from == e.to) throw GraphError("loop edge " + to_string(e) + " is not allowed");
    if (!g.out_.test(e.from, e.to)) {
      g.out_.set(e.from, e.to);
      g.in_.set(e.to, e.from);
      ++g.m_;
    }
  }
  return g;
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> r;
  for_each_bit(out_.row(v), [&](Vertex w) { r.push_back(w); });
  return r;
}

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> r;
  for_each_bit(in_.row(v), [&](Vertex w) { r.push_back(w); });
  return r;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> r;
  r.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(out_.row(u), [&](Vertex v) { r.push_back({u, v}); });
  }
  return r;
}

Digraph Digraph::with_edge(const Edge& e) const {
  auto es = edges();
  es.push_back(e);
  return build(n_, es);
}

Digraph Digraph::without_edge(const Edge& e) const {
  if (!has_edge(e)) throw GraphError("edge " + to_string(e) + " is not in the graph");
  Digraph g = *this;
  g.out_.reset(e.from, e.to);
  g.in_.reset(e.to, e.from);
  --g.m_;
  return g;
}

ReachabilityMatrix reachability(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  BitMatrix r = g.out_rows();
  for (std::size_t v = 0; v < n; ++v) r.set(v, v);
  // Warshall over bit rows: after pivot k, reach through {0..k} is closed.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (u != k && r.test(u, k)) r.or_row_into(u, k);
    }
  }
  return ReachabilityMatrix(std::move(r));
}

std::optional<Path> reaches_avoiding_edge(const Digraph& g, Vertex u, Vertex v, const Edge& skip) {
  if (!g.has_edge(skip)) {
    throw GraphError("edge " + to_string(skip) + " is not in the graph");
  }
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw GraphError("path endpoint out of range");

  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(n, kNone);
  std::deque<Vertex> queue{u};
  parent[u] = u;
  while (!queue.empty() && parent[v] == kNone) {
    const Vertex x = queue.front();
    queue.pop_front();
    for_each_bit(g.out_rows().row(x), [&](Vertex y) {
      if (parent[y] != kNone || (x == skip.from && y == skip.to)) return;
      parent[y] = x;
      queue.push_back(y);
    });
  }
  if (parent[v] == kNone) return std::nullopt;
  Path p{v};
  while (p.back() != u) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<UndirectedEdge> underlying_undirected_edges(const Digraph& g) {
  std::vector<UndirectedEdge> r;
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) || g.has_edge(v, u)) r.push_back({u, v});
    }
  }
  return r;
}

namespace {

bool adjacent(const Digraph& g, Vertex a, Vertex b) { return g.has_edge(a, b) || g.has_edge(b, a); }

}  // namespace

std::optional<std::array<Vertex, 3>> find_triangle(const Digraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!adjacent(g, a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (adjacent(g, a, c) && adjacent(g, b, c)) return std::array<Vertex, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> find_double_edge(const Digraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) && g.has_edge(v, u)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

MantelCheck mantel_bound_check(const Digraph& g) {
  MantelCheck r;
  const std::size_t n = g.vertex_count();
  r.triangle_free = !find_triangle(g).has_value();
  r.undirected_edges = underlying_undirected_edges(g).size();
  r.bound = n * n / 4;
  r.violation = r.triangle_free && r.undirected_edges > r.bound;
  return r;
}

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const Digraph& g) : g_(g), n_(g.vertex_count()), bytes_((n_ * n_ + 7) / 8) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    auto key = [&](Vertex v) { return std::pair{g.out_degree(v), g.in_degree(v)}; };
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return key(a) < key(b); });
    for (std::size_t i = 0; i < n_;) {
      std::size_t j = i;
      while (j < n_ && key(order_[j]) == key(order_[i])) ++j;
      groups_.emplace_back(i, j);
      i = j;
    }
    scratch_.assign(bytes_, 0);
    best_.assign(bytes_, 0xFF);
  }

  std::vector<std::uint8_t> run() {
    permute_group(0);
    return best_;
  }

 private:
  void permute_group(std::size_t gi) {
    if (gi == groups_.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = groups_[gi];
    std::sort(order_.begin() + static_cast<std::ptrdiff_t>(lo), order_.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      permute_group(gi + 1);
    } while (std::next_permutation(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order_.begin() + static_cast<std::ptrdiff_t>(hi)));
  }

  void evaluate() {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j, ++bit) {
        if (g_.has_edge(order_[i], order_[j])) scratch_[bit / 8] |= static_cast<std::uint8_t>(0x80U >> (bit % 8));
      }
      // Row-major prefix comparison: stop as soon as a full byte already loses.
      const std::size_t done = bit / 8;
      if (done > 0 && std::memcmp(scratch_.data(), best_.data(), done) > 0) return;
    }
    if (scratch_ < best_) best_ = scratch_;
  }

  const Digraph& g_;
  std::size_t n_;
  std::size_t bytes_;
  std::vector<Vertex> order_;
  std::vector<std::pair<std::size_t, std::size_t>> groups_;
  std::vector<std::uint8_t> scratch_;
  std::vector<std::uint8_t> best_;
};

}  // namespace

CanonicalCode canonical_code(const Digraph& g, std::size_t limit) {
  if (g.vertex_count() > limit) {
    throw GraphError("canonical_code: n=" + std::to_string(g.vertex_count()) + " exceeds the limit of " +
                     std::to_string(limit) + "; use the search's own pruning for larger graphs");
  }
  return CanonicalCode{g.vertex_count(), Canonicalizer(g).run()};
}

Digraph decode(const CanonicalCode& c) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < c.n; ++i) {
    for (std::size_t j = 0; j < c.n; ++j) {
      const std::size_t bit = i * c.n + j;
      if (c.code[bit / 8] & (0x80U >> (bit % 8))) es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Digraph::build(c.n, es);
}

std::string to_hex(const CanonicalCode& c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (auto b : c.code) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

}  // namespace irr
