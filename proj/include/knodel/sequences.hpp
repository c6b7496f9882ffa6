#pragma once

#include <span>
#include <vector>

#include "knodel/graph.hpp"

namespace knodel {

/// One rotation class of cyclic sequences, with its M_delta statistics.
struct SequenceClass {
  CyclicSequence canonical;
  int parts_in_m = 0;
  int adjacent_sums_in_m = 0;
  /// Same-side pairs sharing a neighbor once the gaps are laid out on a cycle of
  /// length canonical.half (positions from reconstruct_positions).
  int colliding_pairs = 0;
};

/// Lexicographically smallest rotation. Reflections are not identified.
CyclicSequence canonical_rotation(const CyclicSequence& seq);
std::vector<int> canonical_rotation(std::span<const int> gaps);

/// Indices 1, 1 + g_1, 1 + g_1 + g_2, ... on a cycle of length seq.half.
std::vector<int> reconstruct_indices(const CyclicSequence& seq);

/// U-vertices {u_1, u_{1+g_1}, ...}; throws when the gaps do not sum to g.half().
std::vector<Vertex> reconstruct_positions(const KnodelGraph& g, std::span<const int> gaps);

/// Unordered pairs of the U-set that share a neighbor, via common_neighbor_predicate.
int colliding_pairs(const KnodelGraph& g, std::span<const Vertex> u_set);

/// Number of gaps in M_delta.
int parts_in_m(std::span<const int> gaps, int delta = 4);

/// Number of cyclically consecutive pairs g_i + g_{i+1} in M_delta. A sequence of
/// length 1 has no pairs and a sequence of length 2 has the single pair g_1 + g_2.
int adjacent_sums_in_m(std::span<const int> gaps, int delta = 4);

/// All rotation classes of k positive parts summing to `total`, with exactly
/// `parts_in_m_exact` parts in M_delta and at most `adjacent_sums_in_m_max`
/// adjacent sums in M_delta. Sorted lexicographically by canonical form.
/// Infeasible parameters give an empty list.
std::vector<SequenceClass> enumerate_sequences(int k, int total, int parts_in_m_exact, int adjacent_sums_in_m_max,
                                               int delta = 4);

}  // namespace knodel
