// knodel: command-line front end over the libknodel C interface.
//
// Exit status: 0 success or agreement, 1 mathematical disagreement or failed
// verification, 2 usage or I/O error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "documents.hpp"
#include "handles.hpp"
#include "json.hpp"

namespace {

using namespace knodel_cli;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int env_threads() {
  const char* raw = std::getenv("KNODEL_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long t = std::strtol(raw, &end, 10);
  if (*end != '\0' || t < 1 || t > 1024) throw UsageError("KNODEL_THREADS must be an integer in [1, 1024]");
  return static_cast<int>(t);
}

void require_order(int n) {
  if (n % 2 != 0) throw UsageError("order n must be even, got " + std::to_string(n));
  if (n < 16) throw UsageError("W(4,n) requires n >= 16, got " + std::to_string(n));
}

knodel_solve_options solve_options(double budget_seconds, bool canonical) {
  knodel_solve_options o = knodel_solve_options_default();
  o.time_budget_seconds = budget_seconds;
  o.threads = env_threads();
  o.canonical = canonical ? 1 : 0;
  return o;
}

std::string set_text(const knodel_set* s) {
  std::string out = "{";
  for (const auto& x : members(s)) out += (out.size() > 1 ? "," : "") + label(x);
  return out + "}";
}

std::string vertex_list(const knodel_set* s) {
  std::string out;
  for (const auto& x : members(s)) out += (out.empty() ? "" : " ") + label(x);
  return out;
}

struct Exact {
  knodel_solve_outcome outcome{};
  Set certificate;
  bool known() const { return outcome.status == KNODEL_SOLVE_OPTIMAL; }
};

Exact solve(const knodel_graph* g, double budget_seconds, bool canonical) {
  const auto opts = solve_options(budget_seconds, canonical);
  Exact r;
  knodel_set* cert = nullptr;
  check(knodel_solve_exact(g, &opts, &r.outcome, &cert));
  r.certificate.reset(cert);
  return r;
}

int formula_value(int n) {
  knodel_gamma_formula f{};
  check(knodel_gamma_formula_eval(n, &f));
  return f.value;
}

// ---- gamma ---------------------------------------------------------------

struct GammaArgs {
  int n = 0;
  std::string method = "formula";
  double budget = -1.0;
  bool canonical = false;
  bool json = false;
};

int cmd_gamma(const GammaArgs& a) {
  require_order(a.n);
  const bool want_formula = a.method != "exact";
  const bool want_exact = a.method != "formula";

  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["delta"] = 4;
  std::ostringstream text;
  text << "n " << a.n << "\n";

  std::optional<int> formula;
  if (want_formula) {
    knodel_gamma_formula f{};
    check(knodel_gamma_formula_eval(a.n, &f));
    formula = f.value;
    j["formula"] = f.value;
    j["exceptional"] = f.exceptional != 0;
    text << "formula " << f.value << "\n";
  }

  int status = kOk;
  if (want_exact) {
    const Graph g = make_graph(4, a.n);
    const Exact e = solve(g.get(), a.budget, a.canonical);
    if (e.known()) {
      j["exact"] = e.outcome.value;
      j["certificate"] = nlohmann::ordered_json::parse(dump_set_document(document_of(e.certificate.get())));
      text << "exact " << e.outcome.value << "\n";
      text << "certificate " << set_text(e.certificate.get()) << "\n";
    } else {
      j["exact"] = "unknown";
      j["lower_bound"] = e.outcome.lower_bound;
      j["upper_bound"] = e.outcome.upper_bound;
      text << "exact unknown (bounds " << e.outcome.lower_bound << ".." << e.outcome.upper_bound << ")\n";
    }
    if (formula) {
      if (e.known()) {
        const bool agree = *formula == e.outcome.value;
        j["agree"] = agree;
        text << "agree " << (agree ? "true" : "false") << "\n";
        if (!agree) status = kDisagree;
      } else {
        j["agree"] = "unknown";
        text << "agree unknown\n";
      }
    }
  }
  std::cout << (a.json ? j.dump() + "\n" : text.str());
  return status;
}

// ---- construct -----------------------------------------------------------

int cmd_construct(int n, const std::string& out) {
  require_order(n);
  knodel_set* raw = nullptr;
  knodel_set* raw_witness = nullptr;
  const knodel_status st = knodel_construct_dominating_set(n, &raw, &raw_witness);
  Set d(raw);
  Set witness(raw_witness);
  if (st == KNODEL_E_CONSTRUCTION_FAILED) {
    std::cerr << "construction for W(4," << n << ") failed verification\n";
    if (witness) std::cerr << "undominated: " << vertex_list(witness.get()) << "\n";
    return kDisagree;
  }
  check(st);

  // Re-verify independently of the library's own check before writing anything.
  const Graph g = make_graph(4, n);
  int dominating = 0;
  check(knodel_is_dominating(g.get(), d.get(), &dominating));
  if (dominating == 0) {
    knodel_set* und = nullptr;
    check(knodel_undominated(g.get(), d.get(), &und));
    const Set missing(und);
    std::cerr << "construction for W(4," << n << ") is not dominating\nundominated: " << vertex_list(missing.get())
              << "\n";
    return kDisagree;
  }
  write_output(out, dump_set_document(document_of(d.get())) + "\n");
  return kOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const std::vector<int>& graph_spec, const std::string& graph_file, const std::string& set_file) {
  Graph g;
  if (!graph_file.empty()) {
    g = load_adjacency(read_file(graph_file));
  } else {
    g = make_graph(graph_spec.at(1), graph_spec.at(0));
  }
  const int n = knodel_graph_order(g.get());
  const int delta = knodel_graph_delta(g.get());

  const SetDocument doc = parse_set_document(read_file(set_file));
  if (doc.n != n || doc.delta != delta) {
    throw UsageError("set document is for W(" + std::to_string(doc.delta) + "," + std::to_string(doc.n) +
                     ") but the graph is W(" + std::to_string(delta) + "," + std::to_string(n) + ")");
  }
  const Set s = set_of(g.get(), doc);

  knodel_set* und = nullptr;
  check(knodel_undominated(g.get(), s.get(), &und));
  const Set missing(und);
  const size_t k = knodel_set_size(missing.get());
  if (k == 0) {
    std::cout << "PASS: " << knodel_set_size(s.get()) << " vertices dominate W(" << delta << "," << n << ")\n";
    return kOk;
  }
  std::cout << "FAIL: " << k << " undominated vertices\n" << vertex_list(missing.get()) << "\n";
  return kDisagree;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  int from = 16;
  int to = 48;
  double budget = -1.0;
  std::string out = "-";
  bool no_timing = false;
};

int cmd_sweep(const SweepArgs& a) {
  require_order(a.from);
  require_order(a.to);
  if (a.from > a.to) throw UsageError("--from must not exceed --to");

  std::ostringstream csv;
  csv << "n,formula,exact,agree,construct_ok,elapsed_ms\n";
  bool all_good = true;
  for (int n = a.from; n <= a.to; n += 2) {
    const auto start = std::chrono::steady_clock::now();
    const int formula = formula_value(n);

    knodel_set* raw = nullptr;
    knodel_set* raw_witness = nullptr;
    const knodel_status st = knodel_construct_dominating_set(n, &raw, &raw_witness);
    const Set d(raw);
    const Set witness(raw_witness);
    bool construct_ok = false;
    const Graph g = make_graph(4, n);
    if (st == KNODEL_OK) {
      int dominating = 0;
      check(knodel_is_dominating(g.get(), d.get(), &dominating));
      construct_ok = dominating != 0 && static_cast<int>(knodel_set_size(d.get())) == formula;
    } else if (st == KNODEL_E_CONSTRUCTION_FAILED) {
      std::cerr << "n=" << n << ": construction failed";
      if (witness) std::cerr << ", undominated: " << vertex_list(witness.get());
      std::cerr << "\n";
    } else {
      check(st);
    }

    std::string exact = "unknown";
    std::string agree = "unknown";
    if (a.budget != 0.0) {
      const Exact e = solve(g.get(), a.budget, false);
      if (e.known()) {
        exact = std::to_string(e.outcome.value);
        agree = e.outcome.value == formula ? "true" : "false";
      }
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (agree == "false" || !construct_ok) all_good = false;
    csv << n << ',' << formula << ',' << exact << ',' << agree << ',' << (construct_ok ? "true" : "false") << ','
        << (a.no_timing ? 0 : ms.count()) << '\n';
  }
  write_output(a.out, csv.str());
  return all_good ? kOk : kDisagree;
}

// ---- enum-seq ------------------------------------------------------------

struct EnumArgs {
  int k = 0;
  int total = 0;
  int exact_in_m = 0;
  int adj_max = 0;
  int delta = 4;
  std::optional<int> expect;
};

int cmd_enum_seq(const EnumArgs& a) {
  if (a.k < 1) throw UsageError("--k must be >= 1");
  if (a.total < a.k) throw UsageError("--total must be >= --k");
  if (a.delta < 2) throw UsageError("--delta must be >= 2");
  knodel_seq_list* raw = nullptr;
  check(knodel_enumerate_sequences(a.delta, a.k, a.total, a.exact_in_m, a.adj_max, &raw));
  const SeqList list(raw);
  const size_t count = knodel_seq_list_size(list.get());
  for (size_t i = 0; i < count; ++i) {
    knodel_seq_info info{};
    std::vector<int32_t> gaps(static_cast<size_t>(a.k));
    check(knodel_seq_list_get(list.get(), i, &info, gaps.data(), gaps.size()));
    std::cout << '(';
    for (size_t p = 0; p < gaps.size(); ++p) std::cout << (p == 0 ? "" : ",") << gaps[p];
    std::cout << ")  parts_in_m=" << info.parts_in_m << " adjacent_sums_in_m=" << info.adjacent_sums_in_m
              << " colliding_pairs=" << info.colliding_pairs << '\n';
  }
  std::cout << "count " << count << '\n';
  if (a.expect && static_cast<size_t>(*a.expect) != count) {
    std::cerr << "expected " << *a.expect << " classes, found " << count << '\n';
    return kDisagree;
  }
  return kOk;
}

// ---- export --------------------------------------------------------------

int cmd_export(int n, int delta, const std::string& format, const std::string& out) {
  const Graph g = make_graph(delta, n);
  if (format == "edgelist") {
    write_output(out, edge_list(g.get()));
  } else if (format == "dot") {
    write_output(out, dot(g.get()));
  } else {
    write_output(out, adjacency_json(g.get()));
  }
  return kOk;
}

// ---- solve / brute / reconstruct -------------------------------------------

int cmd_solve(int n, int delta, double budget, bool canonical, const std::string& out) {
  const Graph g = make_graph(delta, n);
  const Exact e = solve(g.get(), budget, canonical);
  std::cout << "status " << (e.known() ? "optimal" : "unknown") << "\n";
  std::cout << "value " << e.outcome.value << "\nbounds " << e.outcome.lower_bound << ".." << e.outcome.upper_bound
            << "\nnodes " << e.outcome.nodes_explored << "\ncertificate " << set_text(e.certificate.get()) << "\n";
  if (!out.empty()) write_output(out, dump_set_document(document_of(e.certificate.get())) + "\n");
  return kOk;
}

int cmd_brute(int n, int delta, int max_size) {
  const Graph g = make_graph(delta, n);
  knodel_solve_outcome o{};
  knodel_set* raw = nullptr;
  check(knodel_brute_force_min(g.get(), max_size, &o, &raw));
  const Set cert(raw);
  if (o.status == KNODEL_SOLVE_NONE_WITHIN_LIMIT) {
    std::cout << "none <= " << max_size << "\n";
  } else {
    std::cout << "value " << o.value << "\ncertificate " << set_text(cert.get()) << "\n";
  }
  return kOk;
}

int cmd_reconstruct(int n, int delta, const std::vector<int>& gaps, const std::vector<int>& v_extra,
                    const std::string& out) {
  const Graph g = make_graph(delta, n);
  std::vector<int32_t> in(gaps.begin(), gaps.end());
  std::vector<int32_t> pos(in.size());
  check(knodel_reconstruct_positions(g.get(), in.data(), in.size(), pos.data()));
  SetDocument doc;
  doc.n = n;
  doc.delta = delta;
  doc.u.assign(pos.begin(), pos.end());
  doc.v = v_extra;
  std::sort(doc.v.begin(), doc.v.end());
  doc.v.erase(std::unique(doc.v.begin(), doc.v.end()), doc.v.end());
  (void)set_of(g.get(), doc);  // range check
  write_output(out, dump_set_document(doc) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination in Knodel graphs W(delta, n)"};
  app.require_subcommand(1);

  GammaArgs gamma_args;
  auto* gamma = app.add_subcommand("gamma", "Domination number of W(4,n) by formula and/or exact search");
  gamma->add_option("n", gamma_args.n, "Even order n >= 16")->required();
  gamma->add_option("--method", gamma_args.method, "formula | exact | both")
      ->check(CLI::IsMember({"formula", "exact", "both"}));
  gamma->add_option("--budget", gamma_args.budget, "Solver time budget in seconds (negative: unlimited)");
  gamma->add_flag("--canonical", gamma_args.canonical, "Report the lexicographically smallest optimal set");
  gamma->add_flag("--json", gamma_args.json, "Emit a JSON object");

  int construct_n = 0;
  std::string construct_out = "-";
  auto* construct = app.add_subcommand("construct", "Write the explicit minimum dominating set of W(4,n)");
  construct->add_option("n", construct_n, "Even order n >= 16")->required();
  construct->add_option("--out", construct_out, "Output file ('-' for stdout)");

  std::vector<int> verify_graph;
  std::string verify_graph_file;
  std::string verify_set;
  auto* verify = app.add_subcommand("verify", "Check that a set document dominates a graph");
  auto* graph_opt = verify->add_option("--graph", verify_graph, "Order and degree: --graph N DELTA")->expected(2);
  auto* graph_file_opt = verify->add_option("--graph-file", verify_graph_file, "Adjacency JSON document");
  graph_opt->excludes(graph_file_opt);
  verify->add_option("--set", verify_set, "Set JSON document ('-' for stdin)")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Formula, construction and exact value for a range of orders (CSV)");
  sweep->add_option("--from", sweep_args.from, "First even order")->required();
  sweep->add_option("--to", sweep_args.to, "Last even order")->required();
  sweep->add_option("--budget", sweep_args.budget, "Per-order solver budget in seconds (0 skips the search)");
  sweep->add_option("--out", sweep_args.out, "Output CSV file ('-' for stdout)");
  sweep->add_flag("--no-timing", sweep_args.no_timing, "Write elapsed_ms as 0 for byte-stable output");

  EnumArgs enum_args;
  auto* enum_seq = app.add_subcommand("enum-seq", "Enumerate rotation classes of constrained cyclic sequences");
  enum_seq->add_option("--k", enum_args.k, "Number of parts")->required();
  enum_seq->add_option("--total", enum_args.total, "Sum of the parts (n/2)")->required();
  enum_seq->add_option("--exact-in-m", enum_args.exact_in_m, "Exact number of parts in M_delta")->required();
  enum_seq->add_option("--adj-max", enum_args.adj_max, "Maximum number of adjacent sums in M_delta")->required();
  enum_seq->add_option("--delta", enum_args.delta, "Degree defining M_delta");
  enum_seq->add_option("--expect", enum_args.expect, "Fail unless exactly this many classes are found");

  int export_n = 0;
  int export_delta = 4;
  std::string export_format = "edgelist";
  std::string export_out = "-";
  auto* exp = app.add_subcommand("export", "Export W(delta,n) as DOT, an edge list or JSON adjacency");
  exp->add_option("n", export_n, "Even order")->required();
  exp->add_option("--delta", export_delta, "Degree");
  exp->add_option("--format", export_format, "dot | edgelist | json")->check(CLI::IsMember({"dot", "edgelist", "json"}));
  exp->add_option("--out", export_out, "Output file ('-' for stdout)");

  int solve_n = 0;
  int solve_delta = 4;
  double solve_budget = -1.0;
  bool solve_canonical = false;
  std::string solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "Exact domination number of W(delta,n)");
  solve_cmd->add_option("n", solve_n, "Even order")->required();
  solve_cmd->add_option("--delta", solve_delta, "Degree");
  solve_cmd->add_option("--budget", solve_budget, "Time budget in seconds (negative: unlimited)");
  solve_cmd->add_flag("--canonical", solve_canonical, "Lexicographically smallest optimal certificate");
  solve_cmd->add_option("--out", solve_out, "Write the certificate as a set document");

  int brute_n = 0;
  int brute_delta = 4;
  int brute_max = 0;
  auto* brute = app.add_subcommand("brute", "Exhaustive subset enumeration up to a size limit");
  brute->add_option("n", brute_n, "Even order")->required();
  brute->add_option("--delta", brute_delta, "Degree");
  brute->add_option("--max-size", brute_max, "Largest subset size to try")->required();

  int rec_n = 0;
  int rec_delta = 4;
  std::vector<int> rec_gaps;
  std::vector<int> rec_v;
  std::string rec_out = "-";
  auto* rec = app.add_subcommand("reconstruct", "Set document from a cyclic sequence anchored at u1");
  rec->add_option("--n", rec_n, "Even order")->required();
  rec->add_option("--delta", rec_delta, "Degree");
  rec->add_option("--gaps", rec_gaps, "Comma-separated gaps summing to n/2")->required()->delimiter(',');
  rec->add_option("--v", rec_v, "Comma-separated V-side indices to include")->delimiter(',');
  rec->add_option("--out", rec_out, "Output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gamma) return cmd_gamma(gamma_args);
    if (*construct) return cmd_construct(construct_n, construct_out);
    if (*verify) {
      if (verify_graph.empty() && verify_graph_file.empty()) throw UsageError("verify needs --graph N DELTA or --graph-file");
      return cmd_verify(verify_graph, verify_graph_file, verify_set);
    }
    if (*sweep) return cmd_sweep(sweep_args);
    if (*enum_seq) return cmd_enum_seq(enum_args);
    if (*exp) return cmd_export(export_n, export_delta, export_format, export_out);
    if (*solve_cmd) return cmd_solve(solve_n, solve_delta, solve_budget, solve_canonical, solve_out);
    if (*brute) return cmd_brute(brute_n, brute_delta, brute_max);
    if (*rec) return cmd_reconstruct(rec_n, rec_delta, rec_gaps, rec_v, rec_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
