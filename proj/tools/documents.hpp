#pragma once

// File formats used by the command-line tool.
//
// Set document:       {"n":16,"delta":4,"u":[1,2],"v":[6,7]}
//   exactly these four keys; u and v strictly increasing 1-based indices.
// Adjacency document: {"format":"knodel-adjacency","n":..,"delta":..,
//                      "u_neighbors":[[..],..],"v_neighbors":[[..],..]}
//   row i lists the sorted opposite-side neighbor indices of u_{i+1} / v_{i+1}.

#include <stdexcept>
#include <string>
#include <vector>

#include "handles.hpp"

namespace knodel_cli {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetDocument {
  int n = 0;
  int delta = 0;
  std::vector<int> u;
  std::vector<int> v;
};

SetDocument parse_set_document(const std::string& text);
std::string dump_set_document(const SetDocument& doc);
SetDocument document_of(const knodel_set* s);
/// Throws ApiError (out of range) for indices beyond n/2.
Set set_of(const knodel_graph* g, const SetDocument& doc);

std::string edge_list(const knodel_graph* g);
std::string dot(const knodel_graph* g);
std::string adjacency_json(const knodel_graph* g);
/// Rebuilds the graph and rejects documents whose rows differ from W(delta, n).
Graph load_adjacency(const std::string& text);

std::string read_file(const std::string& path);
/// "-" writes to stdout.
void write_output(const std::string& path, const std::string& content);

}  // namespace knodel_cli
