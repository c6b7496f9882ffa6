// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "knodel/gamma4.hpp"
#include "knodel/sequences.hpp"
#include "knodel/solver.hpp"
#include "oracle.hpp"

#ifndef KNODEL_CLI_PATH
#error "KNODEL_CLI_PATH must point at the knodel executable"
#endif

using namespace knodel;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

// Solved once for criteria 2 and 7.
std::map<int, SolveResult>& sweep_results() {
  static std::map<int, SolveResult> results;
  return results;
}

Outcome formula_table() {
  const std::map<int, int> expected{{16, 4}, {26, 7}, {36, 8}, {18, 4}, {28, 7}, {38, 10}, {20, 4},
                                    {30, 6}, {40, 8}, {22, 6}, {24, 6}, {46, 11}, {48, 12}};
  std::ostringstream bad;
  int ok = 0;
  for (const auto& [n, gamma] : expected) {
    const int got = gamma4::gamma_formula(n).value;
    if (got == gamma) {
      ++ok;
    } else {
      bad << " n=" << n << " got " << got << " want " << gamma;
    }
  }
  return {ok == static_cast<int>(expected.size()),
          std::to_string(ok) + "/" + std::to_string(expected.size()) + " values match" + bad.str()};
}

Outcome exact_sweep() {
  const auto start = Clock::now();
  std::ostringstream bad;
  int ok = 0;
  int count = 0;
  for (int n = 16; n <= 48; n += 2) {
    ++count;
    const KnodelGraph g(4, n);
    auto r = solve_exact(g);
    const int formula = gamma4::gamma_formula(n).value;
    const bool certified = r.status == SolveStatus::Optimal && r.certificate.size() == r.value &&
                           oracle::EdgeListGraph(4, n).dominates(r.certificate.members());
    if (certified && r.value == formula) {
      ++ok;
    } else {
      bad << " n=" << n << " exact " << r.value << " formula " << formula;
    }
    sweep_results().emplace(n, std::move(r));
  }
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < 600.0;
  if (!in_time) bad << " over the 10 minute budget";
  return {ok == count && in_time,
          std::to_string(ok) + "/" + std::to_string(count) + " orders agree, single-threaded, " +
              fmt_seconds(elapsed) + bad.str()};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::ostringstream bad;
  int ok = 0;
  int count = 0;
  for (int n = 16; n <= 24; n += 2) {
    ++count;
    const KnodelGraph g(4, n);
    const int exact = solve_exact(g).value;
    const auto brute = brute_force_min(g, g.order());
    if (brute.status == SolveStatus::Optimal && brute.value == exact) {
      ++ok;
    } else {
      bad << " n=" << n << " brute " << brute.value << " exact " << exact;
    }
  }
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < 60.0;
  if (!in_time) bad << " over the 1 minute budget";
  return {ok == count && in_time,
          std::to_string(ok) + "/" + std::to_string(count) + " orders agree, " + fmt_seconds(elapsed) + bad.str()};
}

Outcome construction_audit() {
  const auto start = Clock::now();
  std::ostringstream bad;
  int ok = 0;
  int count = 0;
  for (int n = 16; n <= 200; n += 2) {
    ++count;
    try {
      const KnodelGraph g(4, n);
      const auto s = gamma4::construct_dominating_set(n);
      if (is_dominating(g, s) && s.size() == gamma4::gamma_formula(n).value) {
        ++ok;
      } else {
        bad << " n=" << n;
      }
    } catch (const gamma4::ConstructionError& e) {
      bad << " n=" << n << " (" << e.witnesses().size() << " undominated)";
    }
  }
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < 10.0;
  if (!in_time) bad << " over the 10 second budget";
  return {ok == count && in_time,
          std::to_string(ok) + "/" + std::to_string(count) + " constructions dominate with formula size, " +
              fmt_seconds(elapsed) + bad.str()};
}

Outcome predicate_equivalence() {
  long pairs = 0;
  long mismatches = 0;
  for (int delta = 2; delta <= 5; ++delta) {
    for (int n = 1 << delta; n <= 64; n += 2) {
      const KnodelGraph g(delta, n);
      for (const Side side : {Side::U, Side::V}) {
        for (int i = 1; i <= g.half(); ++i) {
          for (int j = i + 1; j <= g.half(); ++j) {
            const Vertex a{side, i};
            const Vertex b{side, j};
            ++pairs;
            if (common_neighbor_predicate(g, a, b) == common_neighbors(g, a, b).empty()) ++mismatches;
          }
        }
      }
    }
  }
  return {mismatches == 0 && pairs > 0,
          std::to_string(pairs) + " same-side pairs over delta 2..5, n <= 64, " + std::to_string(mismatches) +
              " mismatches"};
}

Outcome table_reproduction() {
  using Seq = std::vector<int>;
  struct Case {
    int k, total, exact, adj;
    std::vector<Seq> columns;
  };
  const std::vector<Case> cases{
      {3, 13, 2, 0, {{1, 4, 8}, {1, 8, 4}, {2, 3, 8}, {2, 8, 3}, {4, 4, 5}}},
      {4, 19, 1, 1, {{4, 5, 5, 5}, {1, 8, 5, 5}, {8, 1, 5, 5}}},
      {4,
       19,
       2,
       0,
       {{1, 9, 1, 8},
        {2, 8, 1, 8},
        {4, 1, 9, 5},
        {9, 1, 4, 5},
        {3, 2, 9, 5},
        {9, 2, 3, 5},
        {8, 3, 5, 3},
        {3, 6, 5, 5},
        {3, 5, 6, 5},
        {3, 5, 5, 6}}},
  };
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    std::set<Seq> expected;
    for (const auto& col : c.columns) expected.insert(oracle::min_rotation(col));
    std::set<Seq> got;
    const auto classes = enumerate_sequences(c.k, c.total, c.exact, c.adj);
    for (const auto& cls : classes) got.insert(cls.canonical.gaps);
    const bool same = got == expected && classes.size() == c.columns.size();
    pass = pass && same;
    detail << (detail.tellp() > 0 ? ", " : "") << "(" << c.k << "," << c.total << "," << c.exact << "," << c.adj
           << ") " << classes.size() << "/" << c.columns.size() << (same ? " classes equal" : " classes DIFFER");
  }
  return {pass, detail.str()};
}

Outcome bounds_sanity() {
  if (sweep_results().empty()) return {false, "no solved instances (criterion 2 did not run)"};
  std::ostringstream bad;
  int ok = 0;
  for (const auto& [n, r] : sweep_results()) {
    if ((n + 4) / 5 <= r.value && r.value <= n - 4) {
      ++ok;
    } else {
      bad << " n=" << n << " gamma " << r.value;
    }
  }
  return {ok == static_cast<int>(sweep_results().size()),
          std::to_string(ok) + "/" + std::to_string(sweep_results().size()) + " within [ceil(n/5), n-4]" + bad.str()};
}

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& command) {
  Run r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

std::vector<std::string> value_columns(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t cut = std::string::npos;
    std::size_t pos = 0;
    for (int field = 0; field < 5 && pos != std::string::npos; ++field) {
      cut = line.find(',', pos);
      pos = cut == std::string::npos ? cut : cut + 1;
    }
    rows.push_back(line.substr(0, cut));
  }
  return rows;
}

Outcome determinism() {
  const std::string sweep = std::string("'") + KNODEL_CLI_PATH + "' sweep --from 16 --to 48 --no-timing";
  const auto a = run("KNODEL_THREADS=1 " + sweep);
  const auto b = run("KNODEL_THREADS=1 " + sweep);
  const auto p = run("KNODEL_THREADS=4 " + sweep);
  if (a.status != 0 || b.status != 0 || p.status != 0) {
    return {false, "sweep exited with status " + std::to_string(a.status) + "/" + std::to_string(b.status) + "/" +
                       std::to_string(p.status)};
  }
  const auto rows = value_columns(a.out);
  const bool identical = a.out == b.out;
  const bool parallel_same = rows == value_columns(p.out);
  const bool complete = rows.size() == 18;
  return {identical && parallel_same && complete,
          std::string(identical ? "single-threaded runs byte-identical" : "single-threaded runs DIFFER") + ", " +
              (parallel_same ? "4-thread value columns identical" : "4-thread value columns DIFFER") + ", " +
              std::to_string(rows.size() > 0 ? rows.size() - 1 : 0) + " rows"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"formula table", formula_table},
      {"exact vs formula sweep 16..48", exact_sweep},
      {"brute force = branch and bound 16..24", oracle_equivalence},
      {"construction audit 16..200", construction_audit},
      {"common-neighbor predicate equivalence", predicate_equivalence},
      {"sequence table reproduction", table_reproduction},
      {"ceil(n/5) <= gamma <= n-4", bounds_sanity},
      {"sweep determinism", determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o{false, ""};
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << index << "] " << name << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
