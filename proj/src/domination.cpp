#include "knodel/domination.hpp"

#include <bit>

#include "knodel/error.hpp"

namespace knodel {

namespace {

std::size_t word_count(const KnodelGraph& g) { return (static_cast<std::size_t>(g.order()) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(const KnodelGraph& g) : graph_(g), words_(word_count(g), 0) {}

VertexSet::VertexSet(const KnodelGraph& g, std::initializer_list<Vertex> members) : VertexSet(g) {
  for (const auto& x : members) insert(x);
}

VertexSet VertexSet::all(const KnodelGraph& g) {
  VertexSet s(g);
  for (int slot = 0; slot < g.order(); ++slot) s.words_[slot / 64] |= std::uint64_t{1} << (slot % 64);
  return s;
}

bool VertexSet::insert(const Vertex& x) {
  graph_.validate(x);
  const int s = graph_.slot(x);
  auto& w = words_[static_cast<std::size_t>(s / 64)];
  const auto bit = std::uint64_t{1} << (s % 64);
  const bool fresh = (w & bit) == 0;
  w |= bit;
  return fresh;
}

bool VertexSet::erase(const Vertex& x) {
  graph_.validate(x);
  const int s = graph_.slot(x);
  auto& w = words_[static_cast<std::size_t>(s / 64)];
  const auto bit = std::uint64_t{1} << (s % 64);
  const bool had = (w & bit) != 0;
  w &= ~bit;
  return had;
}

bool VertexSet::contains(const Vertex& x) const {
  graph_.validate(x);
  const int s = graph_.slot(x);
  return (words_[static_cast<std::size_t>(s / 64)] >> (s % 64)) & 1U;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int VertexSet::size() const noexcept {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::count(Side side) const noexcept {
  int c = 0;
  for (const auto& x : members()) c += x.side == side ? 1 : 0;
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (auto w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(graph_.vertex_at(static_cast<int>(wi * 64) + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<int> VertexSet::indices(Side side) const {
  std::vector<int> out;
  for (const auto& x : members()) {
    if (x.side == side) out.push_back(x.index);
  }
  return out;
}

void VertexSet::require_same_graph(const VertexSet& other) const {
  if (!(graph_ == other.graph_)) fail(ErrorCode::InvalidArgument, "vertex sets belong to different graphs");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_graph(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

VertexSet closed_neighborhood(const KnodelGraph& g, const VertexSet& s) {
  if (!(s.graph() == g)) fail(ErrorCode::InvalidArgument, "vertex set is bound to a different graph");
  VertexSet out(g);
  for (const auto& x : s.members()) {
    out.insert(x);
    for (const auto& y : g.neighbors(x)) out.insert(y);
  }
  return out;
}

VertexSet undominated(const KnodelGraph& g, const VertexSet& s) {
  const auto covered = closed_neighborhood(g, s);
  VertexSet out(g);
  for (const auto& x : g.vertices()) {
    if (!covered.contains(x)) out.insert(x);
  }
  return out;
}

bool is_dominating(const KnodelGraph& g, const VertexSet& s) { return undominated(g, s).empty(); }

GammaBounds gamma_bounds(const KnodelGraph& g) {
  const int n = g.order();
  const int d = g.delta();
  return {(n + d) / (d + 1), n - d};
}

VertexSet greedy_upper_bound(const KnodelGraph& g) {
  VertexSet chosen(g);
  VertexSet covered(g);
  const auto all = g.vertices();
  int remaining = g.order();
  while (remaining > 0) {
    int best_gain = -1;
    Vertex best{};
    // Slot order is U first, then index, so strict '>' keeps the earliest on ties.
    for (const auto& x : all) {
      int gain = covered.contains(x) ? 0 : 1;
      for (const auto& y : g.neighbors(x)) gain += covered.contains(y) ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    chosen.insert(best);
    if (covered.insert(best)) --remaining;
    for (const auto& y : g.neighbors(best)) {
      if (covered.insert(y)) --remaining;
    }
  }
  return chosen;
}

}  // namespace knodel
