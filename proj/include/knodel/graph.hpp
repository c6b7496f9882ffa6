#pragma once

// Knödel graphs W(delta, n) with parts U = {u_1..u_h} and V = {v_1..v_h},
// h = n/2. u_i ~ v_j iff (j-1) == (i-1) + 2^k - 1 (mod h) for some 0 <= k < delta.
// Adjacency is evaluated from the congruence; nothing is stored.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace knodel {

enum class Side : std::uint8_t { U = 0, V = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::U ? Side::V : Side::U; }

struct Vertex {
  Side side = Side::U;
  int index = 1;  // 1-based

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex u(int i) noexcept { return {Side::U, i}; }
constexpr Vertex v(int j) noexcept { return {Side::V, j}; }

/// "u7" / "v10".
std::string to_string(const Vertex& x);

/// Label in the original 0-based scheme: u_k -> (1, k-1), v_k -> (2, k-1).
std::pair<int, int> original_label(const Vertex& x);
Vertex from_original_label(int part, int j);

class KnodelGraph {
 public:
  /// Throws Error(InvalidArgument) unless n is even, delta >= 1 and n >= 2^delta.
  KnodelGraph(int delta, int n);

  int delta() const noexcept { return delta_; }
  int order() const noexcept { return n_; }
  int half() const noexcept { return n_ / 2; }

  bool contains(const Vertex& x) const noexcept { return x.index >= 1 && x.index <= half(); }
  void validate(const Vertex& x) const;

  /// Neighbors in generator order k = 0..delta-1.
  std::vector<Vertex> neighbors(const Vertex& x) const;
  bool adjacent(const Vertex& a, const Vertex& b) const;

  /// Slots order all vertices as u_1..u_h, v_1..v_h.
  int slot(const Vertex& x) const noexcept {
    return (x.side == Side::U ? 0 : half()) + x.index - 1;
  }
  Vertex vertex_at(int slot) const noexcept {
    return slot < half() ? u(slot + 1) : v(slot - half() + 1);
  }

  std::vector<Vertex> vertices() const;

  friend bool operator==(const KnodelGraph&, const KnodelGraph&) = default;

 private:
  int delta_;
  int n_;
};

/// Largest delta allowed for order n, floor(log2 n).
int max_delta(int n) noexcept;

/// {2^a - 2^b : 0 <= b < a < delta}, sorted ascending. Requires delta >= 2.
std::vector<int> m_delta(int delta);

/// min(|i - j|, h - |i - j|) for two distinct vertices on the same side.
int index_distance(const KnodelGraph& g, const Vertex& a, const Vertex& b);

/// Whether two same-side vertices at circular distance `distance` (mod `half`) share
/// a neighbor: distance or half - distance lies in m_delta(delta).
bool distance_collides(int delta, int half, int distance);

/// Closed-form common-neighbor test: id(a,b) or h - id(a,b) in M_delta.
bool common_neighbor_predicate(const KnodelGraph& g, const Vertex& a, const Vertex& b);

/// N(a) ∩ N(b) by direct intersection, sorted.
std::vector<Vertex> common_neighbors(const KnodelGraph& g, const Vertex& a, const Vertex& b);

/// Gap sequence of a circular arrangement of positions on a cycle of length `half`.
struct CyclicSequence {
  std::vector<int> gaps;
  int half = 0;

  /// Throws unless every gap >= 1 and the gaps sum to half.
  void validate() const;

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;
};

/// Gaps between consecutive chosen U-indices in increasing order, closing the cycle.
CyclicSequence cyclic_sequence(const KnodelGraph& g, std::span<const Vertex> u_set);

}  // namespace knodel
