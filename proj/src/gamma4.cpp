#include "knodel/gamma4.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace knodel::gamma4 {

namespace {

struct ExceptionalOrder {
  int n;
  int addend;
  std::vector<int> u;
  std::vector<int> v;
};

// The n = 28 row differs from the set printed in the source proof
// ({u1,u6,u11,u13,v3,v5,v9}), which leaves u7 and v10 undominated.
// Replacing u6 by u7 is the only single-vertex repair.
const std::array<ExceptionalOrder, 6>& exceptional_orders() {
  static const std::array<ExceptionalOrder, 6> table{{
      {16, 2, {1, 2}, {6, 7}},
      {18, 2, {1, 2}, {6, 7}},
      {26, 3, {1, 4, 9, 10}, {1, 2, 6}},
      {28, 3, {1, 7, 11, 13}, {3, 5, 9}},
      {36, 2, {1, 2, 10, 11}, {6, 7, 15, 16}},
      {38, 4, {1, 6, 11, 16, 18}, {3, 5, 10, 13, 15}},
  }};
  return table;
}

const ExceptionalOrder* find_exceptional(int n) {
  for (const auto& row : exceptional_orders()) {
    if (row.n == n) return &row;
  }
  return nullptr;
}

void require_order(int n) {
  if (n % 2 != 0) fail(ErrorCode::InvalidArgument, "order n must be even, got " + std::to_string(n));
  if (n < 16) fail(ErrorCode::InvalidArgument, "W(4,n) requires n >= 16, got " + std::to_string(n));
}

// first, first+5, ..., last (inclusive endpoint)
void add_progression(VertexSet& s, Side side, int first, int last) {
  for (int i = first; i <= last; i += 5) s.insert({side, i});
}

std::string witness_text(const std::vector<Vertex>& w) {
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

}  // namespace

bool is_exceptional_order(int n) noexcept { return find_exceptional(n) != nullptr; }

FormulaResult gamma_formula(int n) {
  require_order(n);
  FormulaResult r;
  r.n = n;
  r.t = n / 10;
  r.residue = n % 10;
  if (const auto* row = find_exceptional(n)) {
    r.addend = row->addend;
    r.exceptional = true;
  } else {
    switch (r.residue) {
      case 0: r.addend = 0; break;
      case 2:
      case 4: r.addend = 2; break;
      case 6: r.addend = 3; break;
      default: r.addend = 4; break;
    }
  }
  r.value = 2 * r.t + r.addend;
  return r;
}

ConstructionError::ConstructionError(int n, std::vector<Vertex> witnesses)
    : Error(ErrorCode::ConstructionFailed,
            "construction for W(4," + std::to_string(n) + ") is not dominating; undominated: " + witness_text(witnesses)),
      n_(n),
      witnesses_(std::move(witnesses)) {}

VertexSet construct_dominating_set(int n) {
  require_order(n);
  const KnodelGraph g(4, n);
  VertexSet d(g);
  const int t = n / 10;

  if (const auto* row = find_exceptional(n)) {
    for (int i : row->u) d.insert(u(i));
    for (int j : row->v) d.insert(v(j));
  } else {
    add_progression(d, Side::V, 5, 5 * t);
    switch (n % 10) {
      case 0: add_progression(d, Side::U, 1, 5 * t - 4); break;
      case 2:
        add_progression(d, Side::U, 1, 5 * t + 1);
        d.insert(v(5 * t + 1));
        break;
      case 4:
        add_progression(d, Side::U, 1, 5 * t + 1);
        d.insert(v(3));
        break;
      case 6:
        add_progression(d, Side::U, 1, 5 * t + 1);
        d.insert(v(2));
        d.insert(v(3));
        break;
      default:
        add_progression(d, Side::U, 1, 5 * t + 1);
        d.insert(v(3));
        d.insert(v(5 * t - 2));
        d.insert(v(5 * t + 3));
        break;
    }
  }

  const auto missing = undominated(g, d);
  if (!missing.empty()) throw ConstructionError(n, missing.members());
  if (d.size() != gamma_formula(n).value) {
    fail(ErrorCode::ConstructionFailed, "construction for W(4," + std::to_string(n) + ") has " + std::to_string(d.size()) +
                                            " vertices, formula gives " + std::to_string(gamma_formula(n).value));
  }
  return d;
}

}  // namespace knodel::gamma4
