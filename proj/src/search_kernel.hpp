#pragma once

// Bitmask kernels for graphs with at most 32 vertices. Internal to the library.

#include <array>
#include <bit>
#include <cstdint>

namespace irr::detail {

using Mask = std::uint32_t;
inline constexpr int kMaxKernelN = 32;

inline Mask bit(int v) { return Mask{1} << v; }

/// Vertices reachable from `start` when `skip` is removed and `extra` added.
/// Pass -1 endpoints to disable either edit.
template <typename Rows>
Mask reach_from(const Rows& out, Mask start_set, int skip_from, int skip_to, int extra_from, int extra_to) {
  Mask seen = start_set;
  Mask frontier = start_set;
  while (frontier != 0) {
    const int w = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask next = out[w];
    if (w == skip_from) next &= ~bit(skip_to);
    if (w == extra_from) next |= bit(extra_to);
    next &= ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen;
}

/// Irredundant graph with its reflexive closure, grown one edge at a time.
struct SmallGraph {
  int n = 0;
  int m = 0;
  std::array<Mask, kMaxKernelN> out{};
  std::array<Mask, kMaxKernelN> reach{};

  static SmallGraph empty(int n) {
    SmallGraph g;
    g.n = n;
    for (int v = 0; v < n; ++v) g.reach[v] = bit(v);
    return g;
  }

  /// Whether adding (u,v) keeps the graph irredundant.
  bool can_add(int u, int v) const {
    if (reach[u] & bit(v)) return false;
    // (x,y) turns bad only via x ~> u -> v ~> y with (x,y) unused.
    for (int x = 0; x < n; ++x) {
      if (!(reach[x] & bit(u))) continue;
      Mask ys = out[x] & reach[v];
      while (ys != 0) {
        const int y = std::countr_zero(ys);
        ys &= ys - 1;
        if (reach_from(out, bit(x), x, y, u, v) & bit(y)) return false;
      }
    }
    return true;
  }

  void add(int u, int v) {
    out[u] |= bit(v);
    ++m;
    const Mask gained = reach[v];
    for (int w = 0; w < n; ++w) {
      if (reach[w] & bit(u)) reach[w] |= gained;
    }
  }
};

/// Full irredundancy test from adjacency rows.
template <typename Rows>
bool rows_irredundant(const Rows& out, int n) {
  for (int x = 0; x < n; ++x) {
    Mask ys = out[x];
    while (ys != 0) {
      const int y = std::countr_zero(ys);
      ys &= ys - 1;
      if (reach_from(out, bit(x), x, y, -1, -1) & bit(y)) return false;
    }
  }
  return true;
}

}  // namespace irr::detail
