#include "knodel/graph.hpp"

#include <algorithm>
#include <cstdlib>

#include "knodel/error.hpp"

namespace knodel {

std::string to_string(const Vertex& x) {
  return (x.side == Side::U ? "u" : "v") + std::to_string(x.index);
}

std::pair<int, int> original_label(const Vertex& x) {
  return {x.side == Side::U ? 1 : 2, x.index - 1};
}

Vertex from_original_label(int part, int j) {
  if (part != 1 && part != 2) fail(ErrorCode::InvalidArgument, "part must be 1 or 2");
  if (j < 0) fail(ErrorCode::OutOfRange, "negative original index");
  return {part == 1 ? Side::U : Side::V, j + 1};
}

int max_delta(int n) noexcept {
  int d = 0;
  while (d < 30 && (1 << (d + 1)) <= n) ++d;
  return d;
}

KnodelGraph::KnodelGraph(int delta, int n) : delta_(delta), n_(n) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::InvalidArgument, "order n must be an even integer >= 2, got " + std::to_string(n));
  if (delta < 1 || delta > max_delta(n)) {
    fail(ErrorCode::InvalidArgument, "delta must lie in [1, floor(log2 n)] = [1, " + std::to_string(max_delta(n)) +
                                         "], got " + std::to_string(delta));
  }
}

void KnodelGraph::validate(const Vertex& x) const {
  if (!contains(x)) {
    fail(ErrorCode::OutOfRange,
         "vertex " + to_string(x) + " out of range for W(" + std::to_string(delta_) + "," + std::to_string(n_) + ")");
  }
}

std::vector<Vertex> KnodelGraph::neighbors(const Vertex& x) const {
  validate(x);
  const int h = half();
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(delta_));
  for (int k = 0; k < delta_; ++k) {
    const int shift = ((1 << k) - 1) % h;
    if (x.side == Side::U) {
      out.push_back(v((x.index - 1 + shift) % h + 1));
    } else {
      out.push_back(u(((x.index - 1 - shift) % h + h) % h + 1));
    }
  }
  return out;
}

bool KnodelGraph::adjacent(const Vertex& a, const Vertex& b) const {
  validate(a);
  validate(b);
  if (a.side == b.side) return false;
  const Vertex& x = a.side == Side::U ? a : b;
  const Vertex& y = a.side == Side::U ? b : a;
  const int h = half();
  const int diff = ((y.index - x.index) % h + h) % h;
  for (int k = 0; k < delta_; ++k) {
    if (((1 << k) - 1) % h == diff) return true;
  }
  return false;
}

std::vector<Vertex> KnodelGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int s = 0; s < n_; ++s) out.push_back(vertex_at(s));
  return out;
}

std::vector<int> m_delta(int delta) {
  if (delta < 2) fail(ErrorCode::InvalidArgument, "M_delta requires delta >= 2");
  if (delta > 30) fail(ErrorCode::OutOfRange, "delta too large");
  std::vector<int> out;
  for (int a = 1; a < delta; ++a) {
    for (int b = 0; b < a; ++b) out.push_back((1 << a) - (1 << b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void require_same_side_distinct(const KnodelGraph& g, const Vertex& a, const Vertex& b) {
  g.validate(a);
  g.validate(b);
  if (a.side != b.side) fail(ErrorCode::InvalidArgument, "vertices " + to_string(a) + " and " + to_string(b) + " lie on different sides");
  if (a.index == b.index) fail(ErrorCode::InvalidArgument, "vertices must be distinct, got " + to_string(a) + " twice");
}

}  // namespace

int index_distance(const KnodelGraph& g, const Vertex& a, const Vertex& b) {
  require_same_side_distinct(g, a, b);
  const int d = std::abs(a.index - b.index);
  return std::min(d, g.half() - d);
}

bool distance_collides(int delta, int half, int distance) {
  const auto m = m_delta(delta);
  const auto in_m = [&](int x) { return std::binary_search(m.begin(), m.end(), x); };
  return in_m(distance) || in_m(half - distance);
}

bool common_neighbor_predicate(const KnodelGraph& g, const Vertex& a, const Vertex& b) {
  const int id = index_distance(g, a, b);
  if (g.delta() < 2) return false;
  return distance_collides(g.delta(), g.half(), id);
}

std::vector<Vertex> common_neighbors(const KnodelGraph& g, const Vertex& a, const Vertex& b) {
  require_same_side_distinct(g, a, b);
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

void CyclicSequence::validate() const {
  if (gaps.empty()) fail(ErrorCode::InvalidArgument, "cyclic sequence must be nonempty");
  long sum = 0;
  for (int x : gaps) {
    if (x < 1) fail(ErrorCode::InvalidArgument, "cyclic sequence gaps must be positive");
    sum += x;
  }
  if (sum != half) {
    fail(ErrorCode::InvalidArgument,
         "cyclic sequence gaps sum to " + std::to_string(sum) + ", expected " + std::to_string(half));
  }
}

CyclicSequence cyclic_sequence(const KnodelGraph& g, std::span<const Vertex> u_set) {
  if (u_set.empty()) fail(ErrorCode::InvalidArgument, "cyclic sequence of an empty set");
  std::vector<int> idx;
  idx.reserve(u_set.size());
  for (const auto& x : u_set) {
    g.validate(x);
    if (x.side != Side::U) fail(ErrorCode::InvalidArgument, "cyclic sequence requires U-side vertices, got " + to_string(x));
    idx.push_back(x.index);
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) fail(ErrorCode::InvalidArgument, "duplicate vertex in set");

  CyclicSequence seq{{}, g.half()};
  for (std::size_t j = 0; j + 1 < idx.size(); ++j) seq.gaps.push_back(idx[j + 1] - idx[j]);
  seq.gaps.push_back(g.half() + idx.front() - idx.back());
  return seq;
}

}  // namespace knodel
