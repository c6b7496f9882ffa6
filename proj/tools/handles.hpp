#pragma once

// RAII wrappers over the opaque C handles, plus a status-to-exception bridge.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "knodel.h"

namespace knodel_cli {

struct GraphDeleter {
  void operator()(knodel_graph* g) const noexcept { knodel_graph_destroy(g); }
};
struct SetDeleter {
  void operator()(knodel_set* s) const noexcept { knodel_set_destroy(s); }
};
struct SeqListDeleter {
  void operator()(knodel_seq_list* l) const noexcept { knodel_seq_list_destroy(l); }
};

using Graph = std::unique_ptr<knodel_graph, GraphDeleter>;
using Set = std::unique_ptr<knodel_set, SetDeleter>;
using SeqList = std::unique_ptr<knodel_seq_list, SeqListDeleter>;

class ApiError : public std::runtime_error {
 public:
  ApiError(knodel_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  knodel_status status() const noexcept { return status_; }

 private:
  knodel_status status_;
};

inline void check(knodel_status s) {
  if (s != KNODEL_OK) throw ApiError(s, knodel_last_error());
}

inline Graph make_graph(int delta, int n) {
  knodel_graph* g = nullptr;
  check(knodel_graph_create(delta, n, &g));
  return Graph(g);
}

inline std::vector<knodel_vertex> members(const knodel_set* s) {
  std::vector<knodel_vertex> out(knodel_set_size(s));
  size_t count = 0;
  check(knodel_set_members(s, out.data(), out.size(), &count));
  return out;
}

inline std::vector<knodel_vertex> neighbors(const knodel_graph* g, knodel_vertex x) {
  std::vector<knodel_vertex> out(static_cast<size_t>(knodel_graph_delta(g)));
  size_t count = 0;
  check(knodel_graph_neighbors(g, x, out.data(), out.size(), &count));
  out.resize(count);
  return out;
}

inline std::string label(knodel_vertex x) {
  return (x.side == KNODEL_SIDE_U ? "u" : "v") + std::to_string(x.index);
}

}  // namespace knodel_cli
