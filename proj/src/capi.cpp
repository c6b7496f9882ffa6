#include <algorithm>
#include <cmath>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "knodel.h"
#include "knodel/domination.hpp"
#include "knodel/error.hpp"
#include "knodel/gamma4.hpp"
#include "knodel/graph.hpp"
#include "knodel/sequences.hpp"
#include "knodel/solver.hpp"

struct knodel_graph {
  knodel::KnodelGraph g;
};

struct knodel_set {
  knodel::VertexSet s;
};

struct knodel_seq_list {
  std::vector<knodel::SequenceClass> items;
};

namespace {

thread_local std::string last_error;

struct NullPointer {
  const char* what;
};

struct BufferTooSmall {
  size_t needed;
  size_t capacity;
};

knodel_status code_of(knodel::ErrorCode c) {
  switch (c) {
    case knodel::ErrorCode::InvalidArgument: return KNODEL_E_INVALID_ARGUMENT;
    case knodel::ErrorCode::OutOfRange: return KNODEL_E_OUT_OF_RANGE;
    case knodel::ErrorCode::ConstructionFailed: return KNODEL_E_CONSTRUCTION_FAILED;
    case knodel::ErrorCode::Unsupported: return KNODEL_E_UNSUPPORTED;
  }
  return KNODEL_E_INTERNAL;
}

template <class F>
knodel_status guarded(F&& body) noexcept {
  try {
    body();
    return KNODEL_OK;
  } catch (const NullPointer& e) {
    last_error = std::string("null pointer: ") + e.what;
    return KNODEL_E_NULL_POINTER;
  } catch (const BufferTooSmall& e) {
    last_error = "buffer too small: need " + std::to_string(e.needed) + ", have " + std::to_string(e.capacity);
    return KNODEL_E_BUFFER_TOO_SMALL;
  } catch (const knodel::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KNODEL_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KNODEL_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return KNODEL_E_INTERNAL;
  }
}

template <class T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw NullPointer{what};
  return *p;
}

knodel::Vertex to_vertex(knodel_vertex x) {
  if (x.side != KNODEL_SIDE_U && x.side != KNODEL_SIDE_V) {
    knodel::fail(knodel::ErrorCode::InvalidArgument, "side must be KNODEL_SIDE_U or KNODEL_SIDE_V");
  }
  return {x.side == KNODEL_SIDE_U ? knodel::Side::U : knodel::Side::V, x.index};
}

knodel_vertex from_vertex(const knodel::Vertex& x) {
  return {x.side == knodel::Side::U ? KNODEL_SIDE_U : KNODEL_SIDE_V, x.index};
}

template <class Out, class In, class Convert>
void copy_out(const std::vector<In>& items, Out* out, size_t capacity, size_t* count, Convert convert) {
  deref(count, "count");
  *count = items.size();
  if (capacity < items.size()) throw BufferTooSmall{items.size(), capacity};
  if (!items.empty()) deref(out, "out");
  for (size_t i = 0; i < items.size(); ++i) out[i] = convert(items[i]);
}

knodel_solve_outcome outcome_of(const knodel::SolveResult& r) {
  knodel_solve_outcome o{};
  switch (r.status) {
    case knodel::SolveStatus::Optimal: o.status = KNODEL_SOLVE_OPTIMAL; break;
    case knodel::SolveStatus::Unknown: o.status = KNODEL_SOLVE_UNKNOWN; break;
    case knodel::SolveStatus::NoneWithinLimit: o.status = KNODEL_SOLVE_NONE_WITHIN_LIMIT; break;
  }
  o.value = r.value;
  o.lower_bound = r.lower_bound;
  o.upper_bound = r.upper_bound;
  o.nodes_explored = r.nodes_explored;
  o.elapsed_ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return o;
}

std::vector<knodel::Vertex> u_vertices(const int32_t* indices, size_t n) {
  if (n > 0) deref(indices, "u_indices");
  std::vector<knodel::Vertex> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(knodel::u(indices[i]));
  return out;
}

}  // namespace

extern "C" {

const char* knodel_last_error(void) { return last_error.c_str(); }

const char* knodel_status_string(knodel_status status) {
  switch (status) {
    case KNODEL_OK: return "ok";
    case KNODEL_E_INVALID_ARGUMENT: return "invalid argument";
    case KNODEL_E_OUT_OF_RANGE: return "out of range";
    case KNODEL_E_CONSTRUCTION_FAILED: return "construction failed";
    case KNODEL_E_UNSUPPORTED: return "unsupported";
    case KNODEL_E_NULL_POINTER: return "null pointer";
    case KNODEL_E_BUFFER_TOO_SMALL: return "buffer too small";
    case KNODEL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

knodel_status knodel_graph_create(int delta, int n, knodel_graph** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_graph{knodel::KnodelGraph(delta, n)};
  });
}

void knodel_graph_destroy(knodel_graph* g) { delete g; }

int knodel_graph_delta(const knodel_graph* g) { return g == nullptr ? 0 : g->g.delta(); }

int knodel_graph_order(const knodel_graph* g) { return g == nullptr ? 0 : g->g.order(); }

knodel_status knodel_graph_neighbors(const knodel_graph* g, knodel_vertex x, knodel_vertex* out, size_t capacity,
                                     size_t* count) {
  return guarded([&] {
    const auto nb = deref(g, "graph").g.neighbors(to_vertex(x));
    copy_out(nb, out, capacity, count, from_vertex);
  });
}

knodel_status knodel_original_label(knodel_vertex x, int* part, int* j) {
  return guarded([&] {
    const auto [p, idx] = knodel::original_label(to_vertex(x));
    deref(part, "part") = p;
    deref(j, "j") = idx;
  });
}

knodel_status knodel_m_delta(int delta, int* out, size_t capacity, size_t* count) {
  return guarded([&] { copy_out(knodel::m_delta(delta), out, capacity, count, [](int x) { return x; }); });
}

knodel_status knodel_index_distance(const knodel_graph* g, knodel_vertex a, knodel_vertex b, int* out) {
  return guarded([&] { deref(out, "out") = knodel::index_distance(deref(g, "graph").g, to_vertex(a), to_vertex(b)); });
}

knodel_status knodel_common_neighbor_predicate(const knodel_graph* g, knodel_vertex a, knodel_vertex b, int* out) {
  return guarded([&] {
    deref(out, "out") = knodel::common_neighbor_predicate(deref(g, "graph").g, to_vertex(a), to_vertex(b)) ? 1 : 0;
  });
}

knodel_status knodel_common_neighbors(const knodel_graph* g, knodel_vertex a, knodel_vertex b, knodel_vertex* out,
                                      size_t capacity, size_t* count) {
  return guarded([&] {
    const auto common = knodel::common_neighbors(deref(g, "graph").g, to_vertex(a), to_vertex(b));
    copy_out(common, out, capacity, count, from_vertex);
  });
}

knodel_status knodel_cyclic_sequence(const knodel_graph* g, const int32_t* u_indices, size_t n_indices, int32_t* gaps,
                                     size_t capacity, size_t* count) {
  return guarded([&] {
    const auto verts = u_vertices(u_indices, n_indices);
    const auto seq = knodel::cyclic_sequence(deref(g, "graph").g, verts);
    copy_out(seq.gaps, gaps, capacity, count, [](int x) { return static_cast<int32_t>(x); });
  });
}

knodel_status knodel_set_create(const knodel_graph* g, knodel_set** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_set{knodel::VertexSet(deref(g, "graph").g)};
  });
}

void knodel_set_destroy(knodel_set* s) { delete s; }

knodel_status knodel_set_graph(const knodel_set* s, int* delta, int* n) {
  return guarded([&] {
    const auto& g = deref(s, "set").s.graph();
    deref(delta, "delta") = g.delta();
    deref(n, "n") = g.order();
  });
}

knodel_status knodel_set_add(knodel_set* s, knodel_vertex x) {
  return guarded([&] { deref(s, "set").s.insert(to_vertex(x)); });
}

knodel_status knodel_set_contains(const knodel_set* s, knodel_vertex x, int* out) {
  return guarded([&] { deref(out, "out") = deref(s, "set").s.contains(to_vertex(x)) ? 1 : 0; });
}

size_t knodel_set_size(const knodel_set* s) { return s == nullptr ? 0 : static_cast<size_t>(s->s.size()); }

knodel_status knodel_set_members(const knodel_set* s, knodel_vertex* out, size_t capacity, size_t* count) {
  return guarded([&] { copy_out(deref(s, "set").s.members(), out, capacity, count, from_vertex); });
}

knodel_status knodel_closed_neighborhood(const knodel_graph* g, const knodel_set* s, knodel_set** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_set{knodel::closed_neighborhood(deref(g, "graph").g, deref(s, "set").s)};
  });
}

knodel_status knodel_is_dominating(const knodel_graph* g, const knodel_set* s, int* out) {
  return guarded([&] { deref(out, "out") = knodel::is_dominating(deref(g, "graph").g, deref(s, "set").s) ? 1 : 0; });
}

knodel_status knodel_undominated(const knodel_graph* g, const knodel_set* s, knodel_set** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_set{knodel::undominated(deref(g, "graph").g, deref(s, "set").s)};
  });
}

knodel_status knodel_gamma_bounds(const knodel_graph* g, int* lower, int* upper) {
  return guarded([&] {
    const auto b = knodel::gamma_bounds(deref(g, "graph").g);
    deref(lower, "lower") = b.lower;
    deref(upper, "upper") = b.upper;
  });
}

knodel_status knodel_greedy_upper_bound(const knodel_graph* g, knodel_set** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_set{knodel::greedy_upper_bound(deref(g, "graph").g)};
  });
}

knodel_status knodel_gamma_formula_eval(int n, knodel_gamma_formula* out) {
  return guarded([&] {
    const auto r = knodel::gamma4::gamma_formula(n);
    deref(out, "out") = {r.n, r.t, r.residue, r.addend, r.value, r.exceptional ? 1 : 0};
  });
}

knodel_status knodel_construct_dominating_set(int n, knodel_set** out, knodel_set** witnesses) {
  if (witnesses != nullptr) *witnesses = nullptr;
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    try {
      *out = new knodel_set{knodel::gamma4::construct_dominating_set(n)};
    } catch (const knodel::gamma4::ConstructionError& e) {
      if (witnesses != nullptr) {
        knodel::VertexSet w(knodel::KnodelGraph(4, n));
        for (const auto& x : e.witnesses()) w.insert(x);
        *witnesses = new knodel_set{w};
      }
      throw;
    }
  });
}

knodel_solve_options knodel_solve_options_default(void) { return {-1.0, 1, 0}; }

knodel_status knodel_solve_exact(const knodel_graph* g, const knodel_solve_options* options,
                                 knodel_solve_outcome* outcome, knodel_set** certificate) {
  if (certificate != nullptr) *certificate = nullptr;
  return guarded([&] {
    const knodel_solve_options opts = options != nullptr ? *options : knodel_solve_options_default();
    knodel::SolveOptions o;
    if (opts.time_budget_seconds >= 0.0) {
      if (!std::isfinite(opts.time_budget_seconds)) {
        knodel::fail(knodel::ErrorCode::InvalidArgument, "time budget must be finite");
      }
      o.time_budget = std::chrono::duration<double>(opts.time_budget_seconds);
    }
    o.threads = std::max(1, opts.threads);
    o.canonical = opts.canonical != 0;
    const auto r = knodel::solve_exact(deref(g, "graph").g, o);
    deref(outcome, "outcome") = outcome_of(r);
    if (certificate != nullptr) *certificate = new knodel_set{r.certificate};
  });
}

knodel_status knodel_brute_force_min(const knodel_graph* g, int max_size, knodel_solve_outcome* outcome,
                                     knodel_set** certificate) {
  if (certificate != nullptr) *certificate = nullptr;
  return guarded([&] {
    const auto r = knodel::brute_force_min(deref(g, "graph").g, max_size);
    deref(outcome, "outcome") = outcome_of(r);
    if (certificate != nullptr) *certificate = new knodel_set{r.certificate};
  });
}

knodel_status knodel_canonical_rotation(const int32_t* gaps, size_t k, int32_t* out) {
  return guarded([&] {
    if (k == 0) knodel::fail(knodel::ErrorCode::InvalidArgument, "sequence must be nonempty");
    deref(gaps, "gaps");
    deref(out, "out");
    const std::vector<int> in(gaps, gaps + k);
    const auto c = knodel::canonical_rotation(std::span<const int>(in));
    std::copy(c.begin(), c.end(), out);
  });
}

knodel_status knodel_reconstruct_positions(const knodel_graph* g, const int32_t* gaps, size_t k, int32_t* out) {
  return guarded([&] {
    if (k > 0) deref(gaps, "gaps");
    const std::vector<int> in(gaps, gaps + k);
    const auto pos = knodel::reconstruct_positions(deref(g, "graph").g, in);
    deref(out, "out");
    for (size_t i = 0; i < pos.size(); ++i) out[i] = pos[i].index;
  });
}

knodel_status knodel_colliding_pairs(const knodel_graph* g, const int32_t* u_indices, size_t n_indices, int* out) {
  return guarded([&] {
    const auto verts = u_vertices(u_indices, n_indices);
    deref(out, "out") = knodel::colliding_pairs(deref(g, "graph").g, verts);
  });
}

knodel_status knodel_enumerate_sequences(int delta, int k, int total, int parts_in_m_exact,
                                         int adjacent_sums_in_m_max, knodel_seq_list** out) {
  return guarded([&] {
    deref(out, "out");
    *out = nullptr;
    *out = new knodel_seq_list{knodel::enumerate_sequences(k, total, parts_in_m_exact, adjacent_sums_in_m_max, delta)};
  });
}

void knodel_seq_list_destroy(knodel_seq_list* list) { delete list; }

size_t knodel_seq_list_size(const knodel_seq_list* list) { return list == nullptr ? 0 : list->items.size(); }

knodel_status knodel_seq_list_get(const knodel_seq_list* list, size_t i, knodel_seq_info* info, int32_t* gaps,
                                  size_t capacity) {
  return guarded([&] {
    const auto& items = deref(list, "list").items;
    if (i >= items.size()) knodel::fail(knodel::ErrorCode::OutOfRange, "sequence index out of range");
    const auto& cls = items[i];
    if (info != nullptr) {
      *info = {cls.canonical.gaps.size(), cls.canonical.half, cls.parts_in_m, cls.adjacent_sums_in_m,
               cls.colliding_pairs};
    }
    if (gaps != nullptr) {
      if (capacity < cls.canonical.gaps.size()) throw BufferTooSmall{cls.canonical.gaps.size(), capacity};
      std::copy(cls.canonical.gaps.begin(), cls.canonical.gaps.end(), gaps);
    }
  });
}

}  // extern "C"
