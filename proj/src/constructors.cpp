#include "irr/constructors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace irr {

const char* to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::DoubleTree:
      return "double_tree";
    case ExtremalKind::SimpleBalancedCompleteBipartite:
      return "simple_balanced_complete_bipartite";
    case ExtremalKind::Other:
      break;
  }
  return "other";
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Digraph double_tree(std::size_t n, std::span<const UndirectedEdge> tree_edges) {
  if (n == 0) throw GraphError("double_tree: a tree needs at least one vertex");
  if (tree_edges.size() != n - 1) {
    throw GraphError("double_tree: wrong edge count, a tree on " + std::to_string(n) + " vertices has " +
                     std::to_string(n - 1) + " edges, got " + std::to_string(tree_edges.size()));
  }
  DisjointSets sets(n);
  std::vector<Edge> edges;
  edges.reserve(2 * tree_edges.size());
  for (const auto& [a, b] : tree_edges) {
    if (a >= n || b >= n || a == b) {
      throw GraphError("double_tree: invalid tree edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    if (!sets.unite(a, b)) {
      throw GraphError("double_tree: cycle through edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  // n-1 edges without a cycle already force connectivity; kept for the diagnostic.
  for (std::size_t v = 1; v < n; ++v) {
    if (sets.find(v) != sets.find(0)) throw GraphError("double_tree: input is disconnected");
  }
  return Digraph::build(n, edges);
}

Digraph oriented_complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("oriented_complete_bipartite: part sizes must be positive");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Digraph::build(a + b, edges);
}

namespace {

std::optional<std::vector<UndirectedEdge>> as_double_tree(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() != 2 * (n - 1)) return std::nullopt;
  std::vector<UndirectedEdge> tree;
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(e.to, e.from)) return std::nullopt;
    if (e.from < e.to) tree.push_back({e.from, e.to});
  }
  DisjointSets sets(n);
  for (const auto& [a, b] : tree) {
    if (!sets.unite(a, b)) return std::nullopt;
  }
  return tree;
}

}  // namespace

ExtremalClass classify_extremal(const Digraph& g) {
  ExtremalClass c;
  if (auto tree = as_double_tree(g)) {
    c.kind = ExtremalKind::DoubleTree;
    c.tree_edges = std::move(*tree);
    return c;
  }
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (Vertex v = 0; v < n; ++v) {
    const bool out = g.out_degree(v) > 0;
    const bool in = g.in_degree(v) > 0;
    if (out && !in) {
      sources.push_back(v);
    } else if (in && !out) {
      sinks.push_back(v);
    } else {
      return c;  // isolated or has both directions
    }
  }
  const std::size_t a = sources.size();
  const std::size_t b = sinks.size();
  if (g.edge_count() != a * b || (a > b ? a - b : b - a) > 1) return c;
  // Every edge already runs source -> sink, so a*b edges means all of U x V.
  c.kind = ExtremalKind::SimpleBalancedCompleteBipartite;
  c.part_u = std::move(sources);
  c.part_v = std::move(sinks);
  return c;
}

std::vector<UndirectedEdge> tree_from_pruefer(std::size_t n, std::span<const Vertex> seq) {
  if (n < 2) {
    if (!seq.empty()) throw GraphError("pruefer: sequence too long");
    return {};
  }
  if (seq.size() != n - 2) throw GraphError("pruefer: sequence length must be n-2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw GraphError("pruefer: label out of range");
    ++degree[v];
  }
  std::vector<UndirectedEdge> edges;
  for (Vertex v : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    --degree[leaf];
    --degree[v];
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) rest.push_back(v);
  }
  edges.push_back({rest[0], rest[1]});
  return edges;
}

std::vector<UndirectedEdge> path_tree(std::size_t n) {
  std::vector<UndirectedEdge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  return edges;
}

std::vector<UndirectedEdge> random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GraphError("random_tree: n must be positive");
  if (n == 1) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& v : seq) v = pick(rng);
  return tree_from_pruefer(n, seq);
}

namespace {

// AHU encoding of an unrooted tree, rooted at its center(s).
std::string tree_signature(std::size_t n, const std::vector<UndirectedEdge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : adj[leaf]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::function<std::string(Vertex, Vertex)> encode = [&](Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : adj[v]) {
      if (w != parent) children.push_back(encode(w, v));
    }
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (auto& c : children) s += c;
    return s + ")";
  };
  constexpr auto kNoParent = static_cast<Vertex>(-1);
  std::string best;
  for (Vertex c : layer) {
    auto s = encode(c, kNoParent);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// Occurrence counts that are nonincreasing in the label; every tree has a
// labeling with degrees sorted this way, so these cover all shapes.
void for_each_sorted_count(std::size_t n, std::size_t total, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> counts(n, 0);
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left, std::size_t cap) {
    if (left == 0) {
      fn(counts);
      return;
    }
    if (pos == n) return;
    for (std::size_t c = std::min(cap, left); c >= 1; --c) {
      counts[pos] = c;
      rec(pos + 1, left - c, c);
      counts[pos] = 0;
    }
  };
  rec(0, total, total);
}

}  // namespace

std::vector<Digraph> all_double_trees(std::size_t n) {
  if (n < 1 || n > 10) throw GraphError("all_double_trees: n must be in 1..10");
  std::map<std::string, std::vector<UndirectedEdge>> shapes;
  if (n <= 2) {
    shapes.emplace("", path_tree(n));
  } else {
    for_each_sorted_count(n, n - 2, [&](const std::vector<std::size_t>& counts) {
      std::vector<Vertex> seq;
      for (Vertex v = 0; v < n; ++v) seq.insert(seq.end(), counts[v], v);
      do {
        auto tree = tree_from_pruefer(n, seq);
        auto sig = tree_signature(n, tree);
        shapes.try_emplace(std::move(sig), std::move(tree));
      } while (std::next_permutation(seq.begin(), seq.end()));
    });
  }
  std::map<CanonicalCode, Digraph> classes;
  for (const auto& [sig, tree] : shapes) {
    Digraph g = double_tree(n, tree);
    classes.try_emplace(canonical_code(g), g);
  }
  std::vector<Digraph> out;
  for (auto& [code, g] : classes) out.push_back(decode(code));
  return out;
}

}  // namespace irr
