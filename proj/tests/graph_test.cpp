#include "doctest.h"
#include "knodel/error.hpp"
#include "knodel/graph.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace knodel;

namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("build_graph validates order and degree") {
  CHECK_NOTHROW(KnodelGraph(4, 16));
  CHECK_THROWS_AS(KnodelGraph(4, 15), Error);
  CHECK_THROWS_AS(KnodelGraph(4, 14), Error);  // 14 < 2^4
  CHECK_THROWS_AS(KnodelGraph(0, 16), Error);
  CHECK_THROWS_AS(KnodelGraph(5, 16), Error);
  CHECK_NOTHROW(KnodelGraph(5, 32));
  CHECK(max_delta(16) == 4);
  CHECK(max_delta(31) == 4);
  CHECK(max_delta(2) == 1);
}

TEST_CASE("neighbors follow the congruence") {
  const KnodelGraph g46(4, 46);
  CHECK(as_set(g46.neighbors(u(8))) == std::set<Vertex>{v(8), v(9), v(11), v(15)});
  CHECK(as_set(g46.neighbors(u(3))) == std::set<Vertex>{v(3), v(4), v(6), v(10)});

  // Wraparound with n/2 = 8: 5 + {0,1,3,7} mod 8.
  CHECK(as_set(KnodelGraph(4, 16).neighbors(u(6))) == std::set<Vertex>{v(6), v(7), v(1), v(5)});
  // Inverting j - 1 = i - 1 + 2^k - 1 (mod 10) for j = 5.
  CHECK(as_set(KnodelGraph(4, 20).neighbors(v(5))) == std::set<Vertex>{u(5), u(4), u(2), u(8)});

  CHECK_THROWS_AS(g46.neighbors(u(0)), Error);
  CHECK_THROWS_AS(g46.neighbors(v(24)), Error);
}

TEST_CASE("adjacency matches an explicit edge list of the original definition") {
  for (int delta = 1; delta <= 6; ++delta) {
    for (int n = 2; n <= 64; n += 2) {
      if (n < (1 << delta)) continue;
      const KnodelGraph g(delta, n);
      const oracle::EdgeListGraph ref(delta, n);
      CHECK(static_cast<int>(ref.edges().size()) == delta * n / 2);
      for (const auto& x : g.vertices()) {
        const auto nb = g.neighbors(x);
        CHECK(static_cast<int>(nb.size()) == delta);
        CHECK(as_set(nb) == ref.neighbors(x));
        for (const auto& y : nb) {
          CHECK(y.side == opposite(x.side));
          CHECK(g.adjacent(x, y));
          const auto back = g.neighbors(y);
          CHECK(std::find(back.begin(), back.end(), x) != back.end());
        }
      }
    }
  }
}

TEST_CASE("original_label round trip") {
  CHECK(original_label(u(1)) == std::pair{1, 0});
  CHECK(original_label(v(1)) == std::pair{2, 0});
  const KnodelGraph g(4, 16);
  for (const auto& x : g.vertices()) {
    const auto [part, j] = original_label(x);
    CHECK(from_original_label(part, j) == x);
  }
  CHECK_THROWS_AS(from_original_label(3, 0), Error);
}

TEST_CASE("m_delta") {
  CHECK(m_delta(4) == std::vector<int>{1, 2, 3, 4, 6, 7});
  CHECK(m_delta(2) == std::vector<int>{1});
  CHECK(m_delta(3) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(m_delta(1), Error);
  // Distinct power differences give exactly d(d-1)/2 values.
  for (int d = 2; d <= 10; ++d) CHECK(static_cast<int>(m_delta(d).size()) == d * (d - 1) / 2);
}

TEST_CASE("index_distance") {
  const KnodelGraph g26(4, 26);
  CHECK(index_distance(g26, u(1), u(6)) == 5);
  CHECK(index_distance(g26, u(1), u(12)) == 2);
  CHECK(index_distance(g26, u(6), u(1)) == 5);
  CHECK(index_distance(KnodelGraph(4, 38), u(1), u(7)) == 6);
  CHECK(index_distance(g26, v(2), v(13)) == 2);
  CHECK_THROWS_AS(index_distance(g26, u(1), v(2)), Error);
  CHECK_THROWS_AS(index_distance(g26, u(3), u(3)), Error);
}

TEST_CASE("cyclic_sequence") {
  const KnodelGraph g26(4, 26);
  const std::vector<Vertex> s1{u(1), u(4), u(9)};
  CHECK(cyclic_sequence(g26, s1).gaps == std::vector<int>{3, 5, 5});
  const std::vector<Vertex> single{u(1)};
  CHECK(cyclic_sequence(g26, single).gaps == std::vector<int>{13});
  const std::vector<Vertex> s38{u(17), u(1), u(12), u(9)};
  CHECK(cyclic_sequence(KnodelGraph(4, 38), s38).gaps == std::vector<int>{8, 3, 5, 3});

  CHECK_THROWS_AS(cyclic_sequence(g26, std::vector<Vertex>{}), Error);
  CHECK_THROWS_AS(cyclic_sequence(g26, std::vector<Vertex>{u(1), v(2)}), Error);
  CHECK_THROWS_AS(cyclic_sequence(g26, std::vector<Vertex>{u(2), u(2)}), Error);
}

TEST_CASE("cyclic_sequence gaps sum to n/2 and cover every index distance") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 16 + 2 * static_cast<int>(rng() % 40);
    const KnodelGraph g(4, n);
    std::vector<Vertex> s;
    for (int i = 1; i <= g.half(); ++i) {
      if (rng() % 3 == 0) s.push_back(u(i));
    }
    if (s.empty()) s.push_back(u(1 + static_cast<int>(rng() % g.half())));
    const auto seq = cyclic_sequence(g, s);
    long sum = 0;
    for (int x : seq.gaps) {
      CHECK(x >= 1);
      sum += x;
    }
    CHECK(sum == g.half());

    // id(a,b) or n/2 - id(a,b) is a sum of consecutive gaps.
    const int k = static_cast<int>(seq.gaps.size());
    std::set<int> run_sums;
    for (int start = 0; start < k; ++start) {
      int acc = 0;
      for (int len = 1; len < k; ++len) {
        acc += seq.gaps[static_cast<std::size_t>((start + len - 1) % k)];
        run_sums.insert(acc);
      }
    }
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        const int id = index_distance(g, s[a], s[b]);
        CHECK(run_sums.count(id) == 1);
        CHECK(run_sums.count(g.half() - id) == 1);
      }
    }
  }
}

TEST_CASE("common_neighbor_predicate examples") {
  const KnodelGraph g46(4, 46);
  CHECK(common_neighbor_predicate(g46, u(1), u(2)));
  CHECK_FALSE(common_neighbor_predicate(g46, u(1), u(6)));
  const KnodelGraph g16(4, 16);
  CHECK(common_neighbor_predicate(g16, u(1), u(2)));
  CHECK_FALSE(common_neighbors(g16, u(1), u(2)).empty());
  CHECK_THROWS_AS(common_neighbor_predicate(g46, u(1), v(1)), Error);
}

TEST_CASE("common_neighbors examples") {
  const KnodelGraph g46(4, 46);
  CHECK(common_neighbors(g46, u(1), u(2)) == std::vector<Vertex>{v(2)});
  CHECK(common_neighbors(g46, u(1), u(6)).empty());
  CHECK_THROWS_AS(common_neighbors(KnodelGraph(4, 16), u(1), u(1)), Error);
  CHECK_THROWS_AS(common_neighbors(g46, u(1), v(1)), Error);
}

TEST_CASE("common_neighbor_predicate agrees with brute-force intersection") {
  for (int delta = 2; delta <= 5; ++delta) {
    for (int n = 1 << delta; n <= 64; n += 2) {
      const KnodelGraph g(delta, n);
      const oracle::EdgeListGraph ref(delta, n);
      for (const Side side : {Side::U, Side::V}) {
        for (int i = 1; i <= g.half(); ++i) {
          for (int j = i + 1; j <= g.half(); ++j) {
            const Vertex a{side, i};
            const Vertex b{side, j};
            const bool shared = !ref.common(a, b).empty();
            CHECK(common_neighbor_predicate(g, a, b) == shared);
            CHECK(common_neighbors(g, a, b).empty() == !shared);
          }
        }
      }
    }
  }
}
