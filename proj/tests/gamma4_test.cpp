#include "doctest.h"
#include "knodel/gamma4.hpp"
#include "oracle.hpp"

#include <map>

using namespace knodel;
using namespace knodel::gamma4;

TEST_CASE("gamma_formula reproduces the stated values") {
  const std::map<int, int> expected{{16, 4}, {26, 7}, {36, 8}, {18, 4}, {28, 7}, {38, 10}, {20, 4},
                                    {30, 6}, {40, 8}, {22, 6}, {24, 6}, {46, 11}, {48, 12}};
  for (const auto& [n, gamma] : expected) {
    CAPTURE(n);
    CHECK(gamma_formula(n).value == gamma);
  }
}

TEST_CASE("gamma_formula fields") {
  const auto r = gamma_formula(46);
  CHECK(r.n == 46);
  CHECK(r.t == 4);
  CHECK(r.residue == 6);
  CHECK(r.addend == 3);
  CHECK_FALSE(r.exceptional);
  CHECK(gamma_formula(28).addend == 3);
  CHECK(gamma_formula(28).exceptional);
  CHECK(gamma_formula(38).addend == 4);
  CHECK(gamma_formula(36).addend == 2);
  CHECK(gamma_formula(100).addend == 0);
  CHECK(gamma_formula(102).addend == 2);
  CHECK(gamma_formula(104).addend == 2);
  CHECK(gamma_formula(106).addend == 3);
  CHECK(gamma_formula(108).addend == 4);
}

TEST_CASE("gamma_formula rejects invalid orders") {
  CHECK_THROWS_AS(gamma_formula(15), Error);
  CHECK_THROWS_AS(gamma_formula(14), Error);
  CHECK_THROWS_AS(gamma_formula(-2), Error);
  for (int n : {16, 18, 26, 28, 36, 38}) CHECK(is_exceptional_order(n));
  for (int n : {20, 46, 48, 17}) CHECK_FALSE(is_exceptional_order(n));
}

TEST_CASE("construct_dominating_set examples") {
  CHECK(construct_dominating_set(16).members() == std::vector<Vertex>{u(1), u(2), v(6), v(7)});
  CHECK(construct_dominating_set(20).members() == std::vector<Vertex>{u(1), u(6), v(5), v(10)});
  CHECK(construct_dominating_set(26).members() == std::vector<Vertex>{u(1), u(4), u(9), u(10), v(1), v(2), v(6)});
  CHECK(construct_dominating_set(38).members() ==
        std::vector<Vertex>{u(1), u(6), u(11), u(16), u(18), v(3), v(5), v(10), v(13), v(15)});
  CHECK_THROWS_AS(construct_dominating_set(17), Error);
  CHECK_THROWS_AS(construct_dominating_set(14), Error);
}

TEST_CASE("construct_dominating_set audit against the edge-list oracle") {
  for (int n = 16; n <= 200; n += 2) {
    CAPTURE(n);
    const auto s = construct_dominating_set(n);
    CHECK(s.size() == gamma_formula(n).value);
    CHECK(oracle::EdgeListGraph(4, n).dominates(s.members()));
  }
}

TEST_CASE("the seven-vertex set listed for n = 28 misses two vertices") {
  const KnodelGraph g(4, 28);
  const VertexSet listed(g, {u(1), u(6), u(11), u(13), v(3), v(5), v(9)});
  CHECK(undominated(g, listed).members() == std::vector<Vertex>{u(7), v(10)});
  const auto built = construct_dominating_set(28);
  CHECK(built.size() == 7);
  CHECK(is_dominating(g, built));
}

TEST_CASE("ConstructionError carries witnesses") {
  const ConstructionError e(28, {u(7), v(10)});
  CHECK(e.code() == ErrorCode::ConstructionFailed);
  CHECK(e.order() == 28);
  CHECK(e.witnesses().size() == 2);
}
