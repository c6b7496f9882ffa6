#include "doctest.h"
#include "documents.hpp"

#include <algorithm>
#include <string>

using namespace knodel_cli;

TEST_CASE("set document round trip") {
  const std::string text = R"({"n":16,"delta":4,"u":[1,2],"v":[6,7]})";
  const auto doc = parse_set_document(text);
  CHECK(doc.n == 16);
  CHECK(doc.delta == 4);
  CHECK(doc.u == std::vector<int>{1, 2});
  CHECK(doc.v == std::vector<int>{6, 7});
  CHECK(dump_set_document(doc) == text);

  const auto g = make_graph(4, 16);
  const auto s = set_of(g.get(), doc);
  CHECK(knodel_set_size(s.get()) == 4);
  CHECK(dump_set_document(document_of(s.get())) == text);
}

TEST_CASE("set documents are validated strictly") {
  CHECK_THROWS_AS(parse_set_document("{"), DocumentError);
  CHECK_THROWS_AS(parse_set_document("[1,2]"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":16,"delta":4,"u":[2,1],"v":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":16,"delta":4,"u":[1,1],"v":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":16,"delta":4,"u":[1],"v":[],"w":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":16,"delta":4,"u":[1]})"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":"16","delta":4,"u":[],"v":[]})"), DocumentError);
  CHECK_THROWS_AS(parse_set_document(R"({"n":16,"delta":4,"u":[1.5],"v":[]})"), DocumentError);

  const auto g = make_graph(4, 16);
  CHECK_THROWS_AS(set_of(g.get(), parse_set_document(R"({"n":16,"delta":4,"u":[9],"v":[]})")), ApiError);
}

TEST_CASE("exports are stable") {
  const auto g = make_graph(4, 16);
  const auto edges = edge_list(g.get());
  CHECK(edges.rfind("u1 v1\nu1 v2\nu1 v4\nu1 v8\n", 0) == 0);
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 32);
  CHECK(edge_list(g.get()) == edges);

  const auto d = dot(g.get());
  CHECK(d.rfind("graph \"W(4,16)\" {\n", 0) == 0);
  CHECK(d.find("subgraph cluster_U") != std::string::npos);
  CHECK(d.find("subgraph cluster_V") != std::string::npos);
  CHECK(d.find("  u6 -- v1;\n") != std::string::npos);
}

TEST_CASE("adjacency documents round trip and reject tampering") {
  const auto g = make_graph(4, 20);
  const auto text = adjacency_json(g.get());
  const auto back = load_adjacency(text);
  CHECK(knodel_graph_order(back.get()) == 20);
  CHECK(adjacency_json(back.get()) == text);

  std::string tampered = text;
  const auto at = tampered.find("[1,2,4,8]");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 9, "[1,2,4,9]");
  CHECK_THROWS_AS(load_adjacency(tampered), DocumentError);
  CHECK_THROWS_AS(load_adjacency(R"({"n":20,"delta":4})"), DocumentError);
  CHECK_THROWS_AS(load_adjacency(R"({"format":"knodel-adjacency","n":20,"delta":4})"), DocumentError);
  CHECK_THROWS_AS(load_adjacency(R"({"format":"knodel-adjacency","n":21,"delta":4})"), ApiError);
}
