#include "documents.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace knodel_cli {

namespace {

using ordered_json = nlohmann::ordered_json;

int require_int(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw DocumentError(std::string("missing key \"") + key + "\"");
  const auto& x = doc.at(key);
  if (!x.is_number_integer()) throw DocumentError(std::string("\"") + key + "\" must be an integer");
  return x.get<int>();
}

std::vector<int> require_index_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw DocumentError(std::string("missing key \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw DocumentError(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw DocumentError(std::string("\"") + key + "\" must hold integers");
    const int i = x.get<int>();
    if (!out.empty() && i <= out.back()) {
      throw DocumentError(std::string("\"") + key + "\" must be sorted and free of duplicates");
    }
    out.push_back(i);
  }
  return out;
}

nlohmann::json parse_object(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  return doc;
}

std::vector<int> sorted_neighbor_indices(const knodel_graph* g, knodel_vertex x) {
  std::vector<int> out;
  for (const auto& y : neighbors(g, x)) out.push_back(y.index);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SetDocument parse_set_document(const std::string& text) {
  const auto doc = parse_object(text);
  for (const auto& item : doc.items()) {
    const auto& k = item.key();
    if (k != "n" && k != "delta" && k != "u" && k != "v") throw DocumentError("unexpected key \"" + k + "\"");
  }
  SetDocument out;
  out.n = require_int(doc, "n");
  out.delta = require_int(doc, "delta");
  out.u = require_index_array(doc, "u");
  out.v = require_index_array(doc, "v");
  return out;
}

std::string dump_set_document(const SetDocument& doc) {
  ordered_json j;
  j["n"] = doc.n;
  j["delta"] = doc.delta;
  j["u"] = doc.u;
  j["v"] = doc.v;
  return j.dump();
}

SetDocument document_of(const knodel_set* s) {
  SetDocument doc;
  check(knodel_set_graph(s, &doc.delta, &doc.n));
  for (const auto& x : members(s)) (x.side == KNODEL_SIDE_U ? doc.u : doc.v).push_back(x.index);
  return doc;
}

Set set_of(const knodel_graph* g, const SetDocument& doc) {
  knodel_set* raw = nullptr;
  check(knodel_set_create(g, &raw));
  Set s(raw);
  for (int i : doc.u) check(knodel_set_add(s.get(), {KNODEL_SIDE_U, i}));
  for (int j : doc.v) check(knodel_set_add(s.get(), {KNODEL_SIDE_V, j}));
  return s;
}

std::string edge_list(const knodel_graph* g) {
  std::ostringstream os;
  const int h = knodel_graph_order(g) / 2;
  for (int i = 1; i <= h; ++i) {
    for (int j : sorted_neighbor_indices(g, {KNODEL_SIDE_U, i})) os << 'u' << i << " v" << j << '\n';
  }
  return os.str();
}

std::string dot(const knodel_graph* g) {
  std::ostringstream os;
  const int h = knodel_graph_order(g) / 2;
  os << "graph \"W(" << knodel_graph_delta(g) << "," << knodel_graph_order(g) << ")\" {\n";
  for (const char side : {'u', 'v'}) {
    os << "  subgraph cluster_" << static_cast<char>(side - 'a' + 'A') << " {\n";
    os << "    label=\"" << static_cast<char>(side - 'a' + 'A') << "\";\n";
    os << "    rank=same;\n";
    for (int i = 1; i <= h; ++i) os << "    " << side << i << ";\n";
    os << "  }\n";
  }
  for (int i = 1; i <= h; ++i) {
    for (int j : sorted_neighbor_indices(g, {KNODEL_SIDE_U, i})) os << "  u" << i << " -- v" << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string adjacency_json(const knodel_graph* g) {
  const int h = knodel_graph_order(g) / 2;
  ordered_json j;
  j["format"] = "knodel-adjacency";
  j["n"] = knodel_graph_order(g);
  j["delta"] = knodel_graph_delta(g);
  ordered_json un = ordered_json::array();
  ordered_json vn = ordered_json::array();
  for (int i = 1; i <= h; ++i) un.push_back(sorted_neighbor_indices(g, {KNODEL_SIDE_U, i}));
  for (int i = 1; i <= h; ++i) vn.push_back(sorted_neighbor_indices(g, {KNODEL_SIDE_V, i}));
  j["u_neighbors"] = std::move(un);
  j["v_neighbors"] = std::move(vn);
  return j.dump() + "\n";
}

Graph load_adjacency(const std::string& text) {
  const auto doc = parse_object(text);
  if (doc.value("format", std::string()) != "knodel-adjacency") {
    throw DocumentError("not an adjacency document (expected \"format\": \"knodel-adjacency\")");
  }
  const int n = require_int(doc, "n");
  const int delta = require_int(doc, "delta");
  Graph g = make_graph(delta, n);
  const int h = n / 2;
  for (const auto& [key, side] : {std::pair{"u_neighbors", KNODEL_SIDE_U}, std::pair{"v_neighbors", KNODEL_SIDE_V}}) {
    if (!doc.contains(key) || !doc.at(key).is_array()) throw DocumentError(std::string("missing array \"") + key + "\"");
    const auto& rows = doc.at(key);
    if (static_cast<int>(rows.size()) != h) throw DocumentError(std::string("\"") + key + "\" must have n/2 rows");
    for (int i = 1; i <= h; ++i) {
      std::vector<int> row;
      try {
        row = rows.at(static_cast<size_t>(i - 1)).get<std::vector<int>>();
      } catch (const nlohmann::json::exception&) {
        throw DocumentError(std::string("\"") + key + "\" rows must be integer arrays");
      }
      if (row != sorted_neighbor_indices(g.get(), {side, i})) {
        throw DocumentError(std::string("adjacency row ") + (side == KNODEL_SIDE_U ? "u" : "v") + std::to_string(i) +
                            " does not match W(" + std::to_string(delta) + "," + std::to_string(n) + ")");
      }
    }
  }
  return g;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write " + path);
  out << content;
  if (!out) throw DocumentError("failed writing " + path);
}

}  // namespace knodel_cli
