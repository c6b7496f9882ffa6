#include "knodel/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "knodel/error.hpp"

namespace knodel {

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  bool none() const {
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits and_not(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      for (auto x = w[i]; x != 0; x &= x - 1) f(static_cast<int>(i * 64) + std::countr_zero(x));
    }
  }
};

template <std::size_t W>
class BranchAndBound {
 public:
  using Set = Bits<W>;

  struct Node {
    Set chosen;
    Set dominated;
    Set allowed;
    int size = 0;
  };

  explicit BranchAndBound(const KnodelGraph& g) : graph_(g), n_(g.order()), delta_(g.delta()) {
    closed_.resize(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
      const Vertex x = g.vertex_at(s);
      closed_[s].set(s);
      for (const auto& y : g.neighbors(x)) closed_[s].set(g.slot(y));
      all_.set(s);
      (x.side == Side::U ? u_mask_ : v_mask_).set(s);
    }
  }

  SolveResult run(const SolveOptions& options) {
    const auto start = Clock::now();
    const VertexSet greedy = greedy_upper_bound(graph_);

    Shared sh;
    sh.best.store(greedy.size());
    sh.best_set = to_bits(greedy);
    const int root_lower = std::max(gamma_bounds(graph_).lower, residual_bound(all_));

    const auto finish = [&](SolveStatus status, std::uint64_t nodes) {
      const int best = sh.best.load();
      return SolveResult{status,
                         best,
                         status == SolveStatus::Optimal ? best : root_lower,
                         best,
                         to_vertex_set(sh.best_set),
                         nodes,
                         std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
    };

    if (options.time_budget && options.time_budget->count() <= 0.0) return finish(SolveStatus::Unknown, 0);
    if (options.time_budget) {
      sh.deadline = start + std::chrono::duration_cast<Clock::duration>(*options.time_budget);
    }

    Node root;
    root.allowed = all_;
    std::uint64_t nodes = 0;
    if (options.threads <= 1) {
      dfs(root, sh, nodes, 0, -1, nullptr);
    } else {
      nodes = run_parallel(root, sh, options.threads);
    }

    if (sh.expired.load() && sh.best.load() > root_lower) return finish(SolveStatus::Unknown, nodes);

    if (options.canonical) {
      sh.best_set = canonical_certificate(sh.best.load(), nodes);
    }
    return finish(SolveStatus::Optimal, nodes);
  }

 private:
  struct Shared {
    std::atomic<int> best{INT_MAX};
    std::mutex mu;
    Set best_set;
    std::optional<Clock::time_point> deadline;
    std::atomic<bool> expired{false};
    std::atomic<bool> found{false};
    bool stop_on_first = false;
  };

  Set to_bits(const VertexSet& s) const {
    Set b;
    for (const auto& x : s.members()) b.set(graph_.slot(x));
    return b;
  }

  VertexSet to_vertex_set(const Set& b) const {
    VertexSet s(graph_);
    b.for_each([&](int slot) { s.insert(graph_.vertex_at(slot)); });
    return s;
  }

  // Least r_U + r_V that can still cover the undominated vertices of each side.
  int residual_bound(const Set& undom) const {
    const int left_u = undom.count_and(u_mask_);
    const int left_v = undom.count_and(v_mask_);
    for (int r = 0;; ++r) {
      for (int ru = 0; ru <= r; ++ru) {
        const int rv = r - ru;
        if (left_v <= delta_ * ru + rv && left_u <= ru + delta_ * rv) return r;
      }
    }
  }

  void offer(const Node& node, Shared& sh) const {
    std::lock_guard lock(sh.mu);
    if (node.size < sh.best.load()) {
      sh.best_set = node.chosen;
      sh.best.store(node.size);
      if (sh.stop_on_first) sh.found.store(true);
    }
  }

  // With tasks != nullptr, nodes reaching split_depth are collected instead of expanded.
  void dfs(const Node& node, Shared& sh, std::uint64_t& nodes, int depth, int split_depth,
           std::vector<Node>* tasks) const {
    if (sh.expired.load(std::memory_order_relaxed) || sh.found.load(std::memory_order_relaxed)) return;
    ++nodes;
    if ((nodes & 1023U) == 0 && sh.deadline && Clock::now() >= *sh.deadline) {
      sh.expired.store(true);
      return;
    }

    const Set undom = all_.and_not(node.dominated);
    if (undom.none()) {
      offer(node, sh);
      return;
    }
    if (node.size + residual_bound(undom) >= sh.best.load(std::memory_order_relaxed)) return;
    if (tasks != nullptr && depth == split_depth) {
      tasks->push_back(node);
      return;
    }

    int pick = -1;
    int pick_options = INT_MAX;
    undom.for_each([&](int x) {
      const int c = closed_[x].count_and(node.allowed);
      if (c < pick_options) {
        pick_options = c;
        pick = x;
      }
    });
    if (pick_options == 0) return;

    std::array<std::pair<int, int>, 64> order{};
    int m = 0;
    (closed_[pick] & node.allowed).for_each([&](int y) { order[m++] = {-closed_[y].count_and(undom), y}; });
    std::sort(order.begin(), order.begin() + m);

    Node child;
    child.allowed = node.allowed;
    child.size = node.size + 1;
    for (int i = 0; i < m; ++i) {
      const int y = order[i].second;
      child.allowed.reset(y);
      child.chosen = node.chosen;
      child.chosen.set(y);
      child.dominated = node.dominated | closed_[y];
      dfs(child, sh, nodes, depth + 1, split_depth, tasks);
    }
  }

  std::uint64_t run_parallel(const Node& root, Shared& sh, int threads) const {
    std::vector<Node> tasks;
    std::uint64_t nodes = 0;
    for (int split = 1; split <= 6; ++split) {
      tasks.clear();
      dfs(root, sh, nodes, 0, split, &tasks);
      if (tasks.size() >= static_cast<std::size_t>(threads) * 8) break;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total{nodes};
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        std::uint64_t local = 0;
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          // Tasks were collected at depth `split`; they are searched to completion here.
          dfs(tasks[i], sh, local, 0, -1, nullptr);
        }
        total += local;
      });
    }
    workers.clear();
    return total.load();
  }

  // Smallest sorted slot tuple among dominating sets of size `value`, fixed one
  // position at a time by feasibility searches restricted to larger slots.
  Set canonical_certificate(int value, std::uint64_t& nodes) const {
    Node prefix;
    int last = -1;
    for (int p = 0; p < value; ++p) {
      bool placed = false;
      for (int c = last + 1; c < n_ && !placed; ++c) {
        Node node;
        node.chosen = prefix.chosen;
        node.chosen.set(c);
        node.dominated = prefix.dominated | closed_[c];
        for (int s = c + 1; s < n_; ++s) node.allowed.set(s);
        node.size = p + 1;

        Shared probe;
        probe.best.store(value + 1);
        probe.stop_on_first = true;
        dfs(node, probe, nodes, 0, -1, nullptr);
        if (probe.best.load() <= value) {
          prefix.chosen = node.chosen;
          prefix.dominated = node.dominated;
          last = c;
          placed = true;
        }
      }
      if (!placed) fail(ErrorCode::Unsupported, "canonical certificate search failed; value is not optimal");
    }
    return prefix.chosen;
  }

  KnodelGraph graph_;
  int n_;
  int delta_;
  std::vector<Set> closed_;
  Set all_;
  Set u_mask_;
  Set v_mask_;
};

}  // namespace

SolveResult solve_exact(const KnodelGraph& g, const SolveOptions& options) {
  if (options.threads < 1) fail(ErrorCode::InvalidArgument, "threads must be >= 1");
  const int words = (g.order() + 63) / 64;
  if (words <= 1) return BranchAndBound<1>(g).run(options);
  if (words <= 2) return BranchAndBound<2>(g).run(options);
  if (words <= 4) return BranchAndBound<4>(g).run(options);
  if (words <= 8) return BranchAndBound<8>(g).run(options);
  fail(ErrorCode::Unsupported, "exact solver supports at most 512 vertices, got " + std::to_string(g.order()));
}

SolveResult brute_force_min(const KnodelGraph& g, int max_size) {
  if (max_size < 0) fail(ErrorCode::InvalidArgument, "max_size must be >= 0");
  const auto start = Clock::now();
  const int n = g.order();
  const VertexSet full = VertexSet::all(g);

  std::vector<VertexSet> closed;
  closed.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) closed.push_back(closed_neighborhood(g, VertexSet(g, {g.vertex_at(s)})));

  std::uint64_t nodes = 0;
  const auto elapsed = [&] { return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start); };

  for (int k = 1; k <= std::min(max_size, n); ++k) {
    std::vector<VertexSet> acc(static_cast<std::size_t>(k) + 1, VertexSet(g));
    std::vector<int> picks(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int depth, int from) -> bool {
      if (depth == k) {
        ++nodes;
        return acc[static_cast<std::size_t>(k)] == full;
      }
      for (int s = from; s <= n - (k - depth); ++s) {
        picks[static_cast<std::size_t>(depth)] = s;
        acc[static_cast<std::size_t>(depth) + 1] = acc[static_cast<std::size_t>(depth)];
        acc[static_cast<std::size_t>(depth) + 1] |= closed[static_cast<std::size_t>(s)];
        if (rec(depth + 1, s + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) {
      VertexSet cert(g);
      for (int s : picks) cert.insert(g.vertex_at(s));
      return SolveResult{SolveStatus::Optimal, k, k, k, cert, nodes, elapsed()};
    }
  }
  return SolveResult{SolveStatus::NoneWithinLimit, 0, max_size + 1, gamma_bounds(g).upper, VertexSet(g), nodes, elapsed()};
}

}  // namespace knodel
