#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "knodel/graph.hpp"

namespace knodel {

/// Subset of the vertices of one graph, stored as a bitmap over graph slots.
class VertexSet {
 public:
  explicit VertexSet(const KnodelGraph& g);
  VertexSet(const KnodelGraph& g, std::initializer_list<Vertex> members);

  static VertexSet all(const KnodelGraph& g);

  const KnodelGraph& graph() const noexcept { return graph_; }

  /// Returns false if already present. Throws for vertices outside the graph.
  bool insert(const Vertex& x);
  bool erase(const Vertex& x);
  bool contains(const Vertex& x) const;

  bool empty() const noexcept;
  int size() const noexcept;
  int count(Side side) const noexcept;

  /// Sorted: U by index, then V by index.
  std::vector<Vertex> members() const;
  std::vector<int> indices(Side side) const;

  VertexSet& operator|=(const VertexSet& other);
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.graph_ == b.graph_ && a.words_ == b.words_;
  }

 private:
  void require_same_graph(const VertexSet& other) const;

  KnodelGraph graph_;
  std::vector<std::uint64_t> words_;
};

VertexSet closed_neighborhood(const KnodelGraph& g, const VertexSet& s);
bool is_dominating(const KnodelGraph& g, const VertexSet& s);
VertexSet undominated(const KnodelGraph& g, const VertexSet& s);

struct GammaBounds {
  int lower;  // ceil(n / (1 + delta))
  int upper;  // n - delta
};

GammaBounds gamma_bounds(const KnodelGraph& g);

/// Repeatedly adds the vertex covering the most undominated vertices; ties go to
/// U before V, then the smaller index.
VertexSet greedy_upper_bound(const KnodelGraph& g);

}  // namespace knodel
