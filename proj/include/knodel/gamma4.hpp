#pragma once

#include <vector>

#include "knodel/domination.hpp"
#include "knodel/error.hpp"
#include "knodel/graph.hpp"

namespace knodel::gamma4 {

/// Closed form for gamma(W(4,n)) = 2*floor(n/10) + addend.
struct FormulaResult {
  int n = 0;
  int t = 0;        // floor(n / 10)
  int residue = 0;  // n mod 10
  int addend = 0;   // one of 0, 2, 3, 4
  int value = 0;    // 2t + addend
  bool exceptional = false;  // n in {16, 18, 26, 28, 36, 38}
};

/// Throws Error(InvalidArgument) for odd n or n < 16.
FormulaResult gamma_formula(int n);

bool is_exceptional_order(int n) noexcept;

/// Explicit dominating set of size gamma_formula(n).value on W(4,n).
///
/// Residue classes use stride-5 progressions with t = floor(n/10):
///   n = 0 (mod 10): {u_1, u_6, ..., u_{5t-4}} + {v_5, ..., v_{5t}}
///   n = 2:          {u_1, ..., u_{5t+1}} + {v_5, ..., v_{5t}} + {v_{5t+1}}
///   n = 4:          ... + {v_3}
///   n = 6, n >= 46: ... + {v_2, v_3}
///   n = 8, n >= 48: ... + {v_3, v_{5t-2}, v_{5t+3}}
/// Orders 16, 18, 26, 28, 36, 38 come from a fixed table.
///
/// Every result is checked with is_dominating before it is returned; a failing
/// construction throws ConstructionError carrying the undominated vertices.
VertexSet construct_dominating_set(int n);

class ConstructionError : public Error {
 public:
  ConstructionError(int n, std::vector<Vertex> witnesses);

  int order() const noexcept { return n_; }
  const std::vector<Vertex>& witnesses() const noexcept { return witnesses_; }

 private:
  int n_;
  std::vector<Vertex> witnesses_;
};

}  // namespace knodel::gamma4
