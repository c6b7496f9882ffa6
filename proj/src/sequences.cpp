#include "knodel/sequences.hpp"

#include <algorithm>

#include "knodel/error.hpp"

namespace knodel {

namespace {

bool in_m(const std::vector<int>& m, int x) { return std::binary_search(m.begin(), m.end(), x); }

bool is_canonical(const std::vector<int>& gaps) {
  const std::size_t k = gaps.size();
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      const int a = gaps[(r + i) % k];
      if (a < gaps[i]) return false;
      if (a > gaps[i]) break;
    }
  }
  return true;
}

int colliding_pairs_on_cycle(const std::vector<int>& idx, int half, int delta) {
  int c = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const int d = idx[b] - idx[a];
      if (distance_collides(delta, half, std::min(d, half - d))) ++c;
    }
  }
  return c;
}

}  // namespace

std::vector<int> canonical_rotation(std::span<const int> gaps) {
  std::vector<int> best(gaps.begin(), gaps.end());
  std::vector<int> rot(best);
  for (std::size_t r = 1; r < gaps.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

CyclicSequence canonical_rotation(const CyclicSequence& seq) {
  return {canonical_rotation(std::span<const int>(seq.gaps)), seq.half};
}

std::vector<int> reconstruct_indices(const CyclicSequence& seq) {
  seq.validate();
  std::vector<int> idx;
  int pos = 1;
  for (std::size_t j = 0; j < seq.gaps.size(); ++j) {
    idx.push_back(pos);
    pos += seq.gaps[j];
  }
  return idx;
}

std::vector<Vertex> reconstruct_positions(const KnodelGraph& g, std::span<const int> gaps) {
  const CyclicSequence seq{{gaps.begin(), gaps.end()}, g.half()};
  std::vector<Vertex> out;
  for (int i : reconstruct_indices(seq)) out.push_back(u(i));
  return out;
}

int colliding_pairs(const KnodelGraph& g, std::span<const Vertex> u_set) {
  for (const auto& x : u_set) {
    g.validate(x);
    if (x.side != Side::U) fail(ErrorCode::InvalidArgument, "colliding_pairs requires U-side vertices, got " + to_string(x));
  }
  int c = 0;
  for (std::size_t a = 0; a < u_set.size(); ++a) {
    for (std::size_t b = a + 1; b < u_set.size(); ++b) {
      if (u_set[a].index == u_set[b].index) fail(ErrorCode::InvalidArgument, "duplicate vertex " + to_string(u_set[a]));
      if (common_neighbor_predicate(g, u_set[a], u_set[b])) ++c;
    }
  }
  return c;
}

int parts_in_m(std::span<const int> gaps, int delta) {
  const auto m = m_delta(delta);
  return static_cast<int>(std::count_if(gaps.begin(), gaps.end(), [&](int x) { return in_m(m, x); }));
}

int adjacent_sums_in_m(std::span<const int> gaps, int delta) {
  const auto m = m_delta(delta);
  const std::size_t k = gaps.size();
  if (k < 2) return 0;
  const std::size_t pairs = k == 2 ? 1 : k;
  int c = 0;
  for (std::size_t i = 0; i < pairs; ++i) c += in_m(m, gaps[i] + gaps[(i + 1) % k]) ? 1 : 0;
  return c;
}

std::vector<SequenceClass> enumerate_sequences(int k, int total, int parts_in_m_exact, int adjacent_sums_in_m_max,
                                               int delta) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  if (total < k) fail(ErrorCode::InvalidArgument, "total must be >= k");
  const auto m = m_delta(delta);

  std::vector<SequenceClass> out;
  std::vector<int> gaps;
  gaps.reserve(static_cast<std::size_t>(k));

  // Plain composition generator; `in_m_so_far` only prunes overshoot of the part budget.
  const auto rec = [&](auto&& self, int remaining, int in_m_so_far) -> void {
    const int placed = static_cast<int>(gaps.size());
    if (placed == k - 1) {
      gaps.push_back(remaining);
      const int parts = in_m_so_far + (in_m(m, remaining) ? 1 : 0);
      if (parts == parts_in_m_exact && is_canonical(gaps)) {
        const int adj = adjacent_sums_in_m(gaps, delta);
        if (adj <= adjacent_sums_in_m_max) {
          SequenceClass cls;
          cls.canonical = {gaps, total};
          cls.parts_in_m = parts;
          cls.adjacent_sums_in_m = adj;
          cls.colliding_pairs = colliding_pairs_on_cycle(reconstruct_indices(cls.canonical), total, delta);
          out.push_back(std::move(cls));
        }
      }
      gaps.pop_back();
      return;
    }
    const int slots_after = k - placed - 1;
    for (int g = 1; g <= remaining - slots_after; ++g) {
      const int next_in_m = in_m_so_far + (in_m(m, g) ? 1 : 0);
      if (next_in_m > parts_in_m_exact) continue;
      gaps.push_back(g);
      self(self, remaining - g, next_in_m);
      gaps.pop_back();
    }
  };
  rec(rec, total, 0);

  std::sort(out.begin(), out.end(),
            [](const SequenceClass& a, const SequenceClass& b) { return a.canonical.gaps < b.canonical.gaps; });
  return out;
}

}  // namespace knodel
