#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "knodel/domination.hpp"
#include "knodel/graph.hpp"

namespace knodel {

enum class SolveStatus {
  Optimal,          // value is gamma(G), certificate is a minimum dominating set
  Unknown,          // budget ran out; [lower_bound, upper_bound] brackets gamma(G)
  NoneWithinLimit,  // brute force only: no dominating set of size <= max_size
};

struct SolveOptions {
  /// Wall-clock budget; unset means unlimited, zero skips the search.
  std::optional<std::chrono::duration<double>> time_budget;
  /// Worker threads; 1 is the deterministic reference mode.
  int threads = 1;
  /// Replace the certificate by the lexicographically smallest optimal set.
  bool canonical = false;
};

struct SolveResult {
  SolveStatus status;
  int value;  // gamma(G) when Optimal, otherwise the best size found
  int lower_bound;
  int upper_bound;
  VertexSet certificate;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Exact domination number by branch and bound.
///
/// The incumbent starts from greedy_upper_bound. Each node picks the
/// undominated vertex x with the fewest still-allowed members of N[x] and
/// branches on those members; a member tried in an earlier branch is
/// excluded from later siblings. A node is pruned when its size plus the
/// residual lower bound reaches the incumbent. The residual bound is the
/// least r = r_U + r_V with
///   undominated(V) <= delta*r_U + r_V  and  undominated(U) <= r_U + delta*r_V,
/// which is never weaker than ceil(undominated / (delta + 1)).
///
/// Supports graphs with up to 512 vertices.
SolveResult solve_exact(const KnodelGraph& g, const SolveOptions& options = {});

/// Enumerates subsets of size 1..max_size in lexicographic slot order and
/// returns the first dominating one. Intended as an oracle for small n.
SolveResult brute_force_min(const KnodelGraph& g, int max_size);

}  // namespace knodel
