#include "irr/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irr/irredundance.hpp"
#include "irr/reduction.hpp"
#include "search_kernel.hpp"

namespace irr {

namespace {

using detail::SmallGraph;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBudgetCheckInterval = 4096;
constexpr std::size_t kSplitDepth = 10;

struct Candidate {
  std::uint8_t from;
  std::uint8_t to;
};

std::vector<Candidate> all_candidates(std::size_t n) {
  std::vector<Candidate> c;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) c.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
    }
  }
  return c;
}

// A search node: the graph so far (as a mask over candidate indices) and the
// candidates, in order, that may still be added without creating a bad edge.
struct Node {
  SmallGraph graph;
  std::uint64_t chosen = 0;
  std::vector<std::uint8_t> open;
};

// Parameters shared read-only (besides the atomics) by all workers.
struct SearchContext {
  std::vector<Candidate> candidates;
  bool pruning = true;
  bool collect_all = false;  // keep every leaf with >= target edges
  std::size_t target = 0;    // seed for the candidate bound
  std::size_t cap = 0;       // recurrence-table ceiling
  Clock::time_point deadline = Clock::time_point::max();
  std::atomic<std::size_t> best{0};
  std::atomic<bool> expired{false};
};

// One worker's view: recursion plus local results.
class Worker {
 public:
  explicit Worker(SearchContext& ctx) : ctx_(ctx) {}

  void run(const Node& node) {
    std::uint8_t buffer[64];
    std::copy(node.open.begin(), node.open.end(), buffer);
    dfs(node.graph, node.chosen, buffer, static_cast<int>(node.open.size()));
  }

  std::size_t local_best = 0;
  bool any_leaf = false;
  std::vector<std::uint64_t> kept;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  PruneCounts prunes;

 private:
  std::size_t target() const {
    if (ctx_.collect_all) return ctx_.target;
    return std::max(ctx_.target, ctx_.best.load(std::memory_order_relaxed));
  }

  bool out_of_time() {
    if (ctx_.expired.load(std::memory_order_relaxed)) return true;
    if (nodes % kBudgetCheckInterval == 0 && Clock::now() >= ctx_.deadline) {
      ctx_.expired.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void record(std::size_t edges, std::uint64_t chosen) {
    ++leaves;
    if (ctx_.collect_all) {
      if (edges >= ctx_.target) kept.push_back(chosen);
      return;
    }
    if (!any_leaf || edges > local_best) {
      any_leaf = true;
      local_best = edges;
      kept.clear();
      std::size_t seen = ctx_.best.load(std::memory_order_relaxed);
      while (seen < edges && !ctx_.best.compare_exchange_weak(seen, edges, std::memory_order_relaxed)) {
      }
    }
    if (edges == local_best) kept.push_back(chosen);
  }

  void dfs(const SmallGraph& g, std::uint64_t chosen, const std::uint8_t* open, int len) {
    // Skipping open[i] and moving on is the loop; taking it is the recursion.
    for (int i = 0;; ++i) {
      ++nodes;
      if (out_of_time()) return;
      const int remaining = len - i;
      const auto edges = static_cast<std::size_t>(g.m);
      if (ctx_.pruning && edges + static_cast<std::size_t>(remaining) < target()) {
        ++prunes.candidate_bound;
        return;
      }
      if (remaining == 0) {
        record(edges, chosen);
        return;
      }
      if (ctx_.pruning && edges + 1 > ctx_.cap) {
        ++prunes.recurrence_cap;
        continue;
      }
      const Candidate c = ctx_.candidates[open[i]];
      SmallGraph next = g;
      next.add(c.from, c.to);
      std::uint8_t child[64];
      int child_len = 0;
      for (int j = i + 1; j < len; ++j) {
        const Candidate d = ctx_.candidates[open[j]];
        if (next.can_add(d.from, d.to)) child[child_len++] = open[j];
      }
      dfs(next, chosen | (std::uint64_t{1} << open[i]), child, child_len);
    }
  }

  SearchContext& ctx_;
};

Node root_node(const SearchContext& ctx, std::size_t n) {
  Node root;
  root.graph = SmallGraph::empty(static_cast<int>(n));
  for (std::size_t i = 0; i < ctx.candidates.size(); ++i) root.open.push_back(static_cast<std::uint8_t>(i));
  return root;
}

// Breadth-first expansion of the top `depth` take/skip decisions.
std::vector<Node> split(const SearchContext& ctx, Node root, std::size_t depth) {
  std::vector<Node> layer{std::move(root)};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Node> next;
    bool progressed = false;
    for (Node& node : layer) {
      if (node.open.empty()) {
        next.push_back(std::move(node));
        continue;
      }
      progressed = true;
      const std::uint8_t head = node.open.front();
      const Candidate c = ctx.candidates[head];
      Node take;
      take.graph = node.graph;
      take.graph.add(c.from, c.to);
      take.chosen = node.chosen | (std::uint64_t{1} << head);
      for (std::size_t j = 1; j < node.open.size(); ++j) {
        const Candidate e = ctx.candidates[node.open[j]];
        if (take.graph.can_add(e.from, e.to)) take.open.push_back(node.open[j]);
      }
      next.push_back(std::move(take));
      node.open.erase(node.open.begin());
      next.push_back(std::move(node));
    }
    layer = std::move(next);
    if (!progressed) break;
  }
  return layer;
}

Digraph graph_from_mask(std::size_t n, const std::vector<Candidate>& cands, std::uint64_t chosen) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (chosen >> i & 1U) es.push_back({cands[i].from, cands[i].to});
  }
  return Digraph::build(n, es);
}

std::vector<CanonicalCode> canonical_classes(std::size_t n, const std::vector<Candidate>& cands,
                                             std::vector<std::uint64_t> masks, bool parallel) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<CanonicalCode> codes(masks.size());
  const auto count = static_cast<std::int64_t>(masks.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    codes[static_cast<std::size_t>(i)] = canonical_code(graph_from_mask(n, cands, masks[static_cast<std::size_t>(i)]));
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes;
}

void configure(SearchContext& ctx, std::size_t n, const SearchOptions& options) {
  ctx.candidates = all_candidates(n);
  ctx.pruning = options.pruning;
  // Constructive lower bounds: a double tree (2n-2) and the balanced orientation (n^2/4).
  ctx.target = std::max(n == 0 ? 0 : 2 * n - 2, n * n / 4);
  ctx.cap = n >= 2 ? recurrence_bound(n)[n] : 0;
  if (options.budget.count() > 0) ctx.deadline = Clock::now() + options.budget;
}

void check_search_n(std::size_t n) {
  if (n < 1 || n > kMaxSearchN) {
    throw GraphError("max_irredundant: n=" + std::to_string(n) + " is outside 1.." + std::to_string(kMaxSearchN) +
                     "; larger n is settled by the closed form, not searched");
  }
}

SearchReport run_search(std::size_t n, const SearchOptions& options, bool parallel) {
  check_search_n(n);
  const auto start = Clock::now();
  SearchContext ctx;
  configure(ctx, n, options);

  std::vector<Node> tasks;
  if (parallel) {
    tasks = split(ctx, root_node(ctx, n), kSplitDepth);
  } else {
    tasks.push_back(root_node(ctx, n));
  }

  std::vector<Worker> results(tasks.size(), Worker(ctx));
  const auto task_count = static_cast<std::int64_t>(tasks.size());
  int workers = 1;
  int threads = 1;
#ifdef _OPENMP
  threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#endif
#pragma omp parallel if (parallel) num_threads(threads)
  {
#ifdef _OPENMP
#pragma omp single
    workers = omp_get_num_threads();
#endif
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < task_count; ++t) results[static_cast<std::size_t>(t)].run(tasks[static_cast<std::size_t>(t)]);
  }

  SearchReport report;
  report.n = n;
  report.workers = workers;
  bool found = false;
  for (const Worker& w : results) {
    if (w.any_leaf && (!found || w.local_best > report.f_value)) {
      report.f_value = w.local_best;
      found = true;
    }
  }
  std::vector<std::uint64_t> masks;
  for (const Worker& w : results) {
    report.nodes_expanded += w.nodes;
    report.leaves += w.leaves;
    report.prune_counts.candidate_bound += w.prunes.candidate_bound;
    report.prune_counts.recurrence_cap += w.prunes.recurrence_cap;
    if (w.any_leaf && w.local_best == report.f_value) masks.insert(masks.end(), w.kept.begin(), w.kept.end());
  }
  report.labeled_extremal = masks.size();
  report.extremal_codes = canonical_classes(n, ctx.candidates, std::move(masks), parallel);
  report.partial = ctx.expired.load();
  report.wall_time = Clock::now() - start;
  return report;
}

}  // namespace

SearchReport max_irredundant(std::size_t n, const SearchOptions& options) {
  return run_search(n, options, true);
}

SearchReport max_irredundant_serial(std::size_t n, const SearchOptions& options) {
  return run_search(n, options, false);
}

std::vector<CanonicalCode> enumerate_irredundant(std::size_t n, std::size_t min_edges) {
  if (n < 1 || n > kMaxEnumerateN) {
    throw GraphError("enumerate_irredundant: n must be in 1.." + std::to_string(kMaxEnumerateN));
  }
  SearchContext ctx;
  ctx.candidates = all_candidates(n);
  ctx.pruning = true;
  ctx.collect_all = true;
  ctx.target = min_edges;
  ctx.cap = std::numeric_limits<std::size_t>::max();
  Worker w(ctx);
  w.run(root_node(ctx, n));
  return canonical_classes(n, ctx.candidates, std::move(w.kept), true);
}

std::vector<TheoremVerdict> verify_theorem(std::size_t n_max, const SearchOptions& options) {
  check_search_n(n_max);
  std::vector<TheoremVerdict> verdicts;
  for (std::size_t n = 1; n <= n_max; ++n) {
    TheoremVerdict v;
    v.n = n;
    v.search = max_irredundant(n, options);
    v.f_found = v.search.f_value;
    v.f_expected = f_closed_form(n);
    v.f_matches = v.f_found == v.f_expected;

    const bool trees_allowed = n <= 7;
    const bool bipartite_allowed = n >= 7;
    v.characterization_holds = true;
    for (const CanonicalCode& code : v.search.extremal_codes) {
      const ExtremalKind kind = classify_extremal(decode(code)).kind;
      if (kind == ExtremalKind::DoubleTree && trees_allowed) {
        ++v.double_tree_classes;
      } else if (kind == ExtremalKind::SimpleBalancedCompleteBipartite && bipartite_allowed) {
        ++v.bipartite_classes;
      } else {
        ++v.other_classes;
        v.characterization_holds = false;
        v.unexpected.push_back(code);
      }
    }

    const std::set<CanonicalCode> found(v.search.extremal_codes.begin(), v.search.extremal_codes.end());
    v.families_complete = true;
    if (trees_allowed) {
      for (const Digraph& t : all_double_trees(n)) v.families_complete &= found.contains(canonical_code(t));
    }
    if (bipartite_allowed) {
      v.families_complete &= found.contains(canonical_code(oriented_complete_bipartite(n / 2, n - n / 2)));
      v.families_complete &= found.contains(canonical_code(oriented_complete_bipartite(n - n / 2, n / 2)));
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

// ---- complete bipartite sweep ----

namespace {

std::uint64_t pow3(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 3;
  return r;
}

void check_sweep(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw GraphError("bipartite sweep: part sizes must be positive");
  if (a * b > kMaxSweepPairs) {
    throw GraphError("bipartite sweep: a*b=" + std::to_string(a * b) + " exceeds the cap of " +
                     std::to_string(kMaxSweepPairs) + " (3^16 orientations)");
  }
}

// Keeps the smallest `limit` sweep indices seen.
void keep_smallest(std::vector<std::uint64_t>& codes, std::size_t limit) {
  std::sort(codes.begin(), codes.end());
  if (codes.size() > limit) codes.resize(limit);
}

}  // namespace

Digraph bipartite_orientation(std::size_t a, std::size_t b, std::uint64_t code) {
  check_sweep(a, b);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      const auto digit = code % 3;
      code /= 3;
      const auto u = static_cast<Vertex>(i);
      const auto v = static_cast<Vertex>(a + j);
      if (digit != 1) es.push_back({u, v});
      if (digit != 0) es.push_back({v, u});
    }
  }
  return Digraph::build(a + b, es);
}

BipartiteSweepReport verify_bipartite_simplicity(std::size_t a, std::size_t b) {
  check_sweep(a, b);
  using detail::Mask;
  const std::size_t pairs = a * b;
  const int n = static_cast<int>(a + b);
  const std::uint64_t total = pow3(pairs);
  const bool check_paths = a >= 3 && b >= 3;

  BipartiteSweepReport report;
  report.a = a;
  report.b = b;
  report.orientations_checked = total;
  report.long_path_checked = check_paths;

  std::uint64_t irredundant = 0;
  std::uint64_t non_simple = 0;
  std::uint64_t doubles = 0;
  std::uint64_t long_paths = 0;
  std::vector<std::uint64_t> examples;

#pragma omp parallel reduction(+ : irredundant, non_simple, doubles, long_paths)
  {
    std::vector<std::uint64_t> mine;
#pragma omp for schedule(static)
    for (std::int64_t signed_code = 0; signed_code < static_cast<std::int64_t>(total); ++signed_code) {
      std::uint64_t code = static_cast<std::uint64_t>(signed_code);
      std::array<Mask, detail::kMaxKernelN> out{};
      std::size_t forward = 0;
      std::size_t backward = 0;
      bool has_double = false;
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          const auto digit = code % 3;
          code /= 3;
          const int u = static_cast<int>(i);
          const int v = static_cast<int>(a + j);
          if (digit != 1) out[u] |= detail::bit(v);
          if (digit != 0) out[v] |= detail::bit(u);
          forward += digit == 0 ? 1 : 0;
          backward += digit == 1 ? 1 : 0;
          has_double |= digit == 2;
        }
      }
      if (!detail::rows_irredundant(out, n)) continue;
      ++irredundant;
      if (has_double) ++doubles;
      if (forward != pairs && backward != pairs) {
        ++non_simple;
        if (mine.size() < kMaxSweepExamples) mine.push_back(static_cast<std::uint64_t>(signed_code));
      }
      if (check_paths) {
        bool found = false;
        for (int p = 0; p < n && !found; ++p) {
          for (Mask qs = out[p]; qs != 0 && !found; qs &= qs - 1) {
            const int q = std::countr_zero(qs);
            for (Mask rs = out[q] & ~detail::bit(p); rs != 0 && !found; rs &= rs - 1) {
              const int r = std::countr_zero(rs);
              found = (out[r] & ~detail::bit(q)) != 0;
            }
          }
        }
        if (found) ++long_paths;
      }
    }
#pragma omp critical
    examples.insert(examples.end(), mine.begin(), mine.end());
  }

  report.irredundant_count = irredundant;
  report.non_simple_count = non_simple;
  report.double_edge_count = doubles;
  report.long_path_count = long_paths;
  keep_smallest(examples, kMaxSweepExamples);
  report.examples_truncated = non_simple > examples.size();
  for (std::uint64_t code : examples) report.non_simple_irredundant.push_back(bipartite_orientation(a, b, code));
  return report;
}

namespace {

bool has_long_path(const Digraph& g) {
  for (const Edge& pq : g.edges()) {
    for (Vertex r : g.out_neighbors(pq.to)) {
      if (r == pq.from) continue;
      for (Vertex s : g.out_neighbors(r)) {
        if (s != pq.to && s != pq.from) return true;
      }
    }
  }
  return false;
}

}  // namespace

BipartiteSweepReport verify_bipartite_simplicity_serial(std::size_t a, std::size_t b) {
  check_sweep(a, b);
  BipartiteSweepReport report;
  report.a = a;
  report.b = b;
  report.orientations_checked = pow3(a * b);
  report.long_path_checked = a >= 3 && b >= 3;
  for (std::uint64_t code = 0; code < report.orientations_checked; ++code) {
    const Digraph g = bipartite_orientation(a, b, code);
    if (!check(g).is_irredundant) continue;
    ++report.irredundant_count;
    if (find_double_edge(g)) ++report.double_edge_count;
    const bool all_forward = g.edge_count() == a * b && std::ranges::all_of(g.edges(), [&](const Edge& e) { return e.from < a; });
    const bool all_backward = g.edge_count() == a * b && std::ranges::all_of(g.edges(), [&](const Edge& e) { return e.from >= a; });
    if (!all_forward && !all_backward) {
      ++report.non_simple_count;
      if (report.non_simple_irredundant.size() < kMaxSweepExamples) report.non_simple_irredundant.push_back(g);
    }
    if (report.long_path_checked && has_long_path(g)) ++report.long_path_count;
  }
  report.examples_truncated = report.non_simple_count > report.non_simple_irredundant.size();
  return report;
}

}  // namespace irr
