#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minconn/bounds.hpp"
#include "minconn/connectivity.hpp"
#include "minconn/constructions.hpp"
#include "minconn/errors.hpp"
#include "minconn/graph_io.hpp"
#include "minconn/json_export.hpp"
#include "minconn/oracle.hpp"
#include "minconn/plan.hpp"
#include "minconn/structure.hpp"

namespace {

using namespace minconn;

constexpr int exit_ok = 0;
constexpr int exit_not_verified = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_parse = 3;

constexpr const char* sweep_header =
    "k,n,m,regime,simple,oxley,tight,mader_num,mader_den,threshold_num,"
    "threshold_den,parity_feasible,i,l,j,witness_verified";

GraphFormat parse_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "json") return GraphFormat::json;
  throw CLI::ValidationError("--format", "unknown format: " + name);
}

// One SweepRow. Rational columns are emitted as reduced num/den pairs;
// unavailable fields stay empty.
void emit_sweep_row(std::ostream& out, long long m, long long n, int k,
                    bool build_witness) {
  BoundReport b = bound_report(m, n, k);
  ParityClass pc = classify_parity(m, n, k);
  PlanResult planned = plan_witness(m, n, k);
  out << k << ',' << n << ',' << m << ',' << b.regime << ','
      << b.simple << ',' << b.oxley << ',' << b.tight << ','
      << b.mader.num() << ',' << b.mader.den() << ','
      << b.threshold_m0.num() << ',' << b.threshold_m0.den() << ','
      << (pc.feasible ? 1 : 0) << ',';
  if (pc.i.has_value()) out << *pc.i;
  out << ',';
  if (planned.plan) out << planned.plan->l;
  out << ',';
  if (planned.plan) out << planned.plan->j;
  out << ',';
  if (build_witness && pc.feasible && pc.n_condition_met) {
    Witness w = construct_witness(m, n, k);
    out << (w.verified ? 1 : 0);
  }
  out << '\n';
}

int cmd_construct(int k, long long n, long long m,
                  const std::optional<std::string>& out_path,
                  const std::optional<std::string>& format_name) {
  Witness w;
  try {
    w = construct_witness(m, n, k);
  } catch (const InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << "\n";
    if (!err.suggested_m().empty()) {
      std::cerr << "nearest feasible m:";
      for (long long s : err.suggested_m()) std::cerr << ' ' << s;
      std::cerr << "\n";
    }
    return exit_infeasible;
  } catch (const VerificationError& err) {
    std::cerr << "verification failure: " << err.what() << "\n";
    return exit_not_verified;
  }
  GraphFormat format =
      format_name ? parse_format(*format_name)
                  : detect_format(out_path.value_or(""), "");
  std::string encoded = write_graph(w.graph, format);
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *out_path << "\n";
      return exit_parse;
    }
    out << encoded;
    std::ofstream sidecar(*out_path + ".plan.json");
    sidecar << witness_sidecar(w).dump(2) << "\n";
  } else {
    std::cout << encoded;
  }
  std::cerr << "witness: n=" << w.graph.n() << " m=" << w.graph.m() << " |V_"
            << k << "|=" << w.expected_vk
            << " bound=" << tight_lower(m, n, k) << " regime="
            << regime_name(w.plan.regime) << " (l=" << w.plan.l
            << ", i=" << w.plan.i << ", j=" << w.plan.j << ") verified\n";
  return exit_ok;
}

int cmd_verify(const std::string& path, int k, bool want_separators) {
  Graph g;
  try {
    g = load_graph_file(path);
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return exit_parse;
  }
  ConnectivityCertificate cert = vertex_connectivity(g);
  MinimalityReport min_report = is_minimally_k_connected(g, k, want_separators);
  StructureReport sr = structure_report(g, k);

  nlohmann::json report{{"file", path},
                        {"k", k},
                        {"n", g.n()},
                        {"m", g.m()},
                        {"kappa", cert.kappa},
                        {"minimality", to_json(min_report)},
                        {"structure", to_json(sr)}};
  if (cert.witness_separator.has_value()) {
    report["kappa_separator"] = *cert.witness_separator;
  } else {
    report["kappa_separator"] = nullptr;
  }
  if (k >= 2 && g.n() > k) {
    BoundReport b = bound_report(g.m(), g.n(), k);
    report["bounds"] = to_json(b);
    report["parity"] = to_json(classify_parity(g.m(), g.n(), k));
    report["equalities"] = {
        {"mader", sr.vk == mader_lower(g.n(), k).ceil()},
        {"generalized_mader",
         sr.vk ==
             mader_generalized_lower(g.n(), k, sr.c_f, sr.ek, sr.delta)
                 .ceil()},
        {"oxley", sr.vk == b.oxley},
        {"simple", sr.vk == b.simple},
        {"tight", sr.vk == b.tight}};
  }
  std::cout << report.dump(2) << "\n";

  std::cerr << "kappa=" << cert.kappa << " k=" << k
            << (min_report.is_minimal
                    ? " minimally k-connected"
                    : min_report.is_k_connected
                          ? " k-connected but not minimal"
                          : " not k-connected")
            << "; |V_k|=" << sr.vk << " ek=" << sr.ek << " c_f=" << sr.c_f
            << " delta=" << sr.delta << "\n";
  if (min_report.violating_edge.has_value()) {
    std::cerr << "removable edge: {" << min_report.violating_edge->first
              << ", " << min_report.violating_edge->second << "}\n";
  }
  return min_report.is_minimal ? exit_ok : exit_not_verified;
}

int cmd_bounds(int k, long long n, std::optional<long long> m,
               const std::optional<std::string>& m_range, bool witness) {
  auto [lo, hi] = edge_range(n, k);
  long long from = lo;
  long long to = hi;
  if (m.has_value()) {
    from = to = *m;
  } else if (m_range.has_value()) {
    std::istringstream in(*m_range);
    char sep = 0;
    if (!(in >> from >> sep >> to) || sep != ':' || from > to) {
      throw CLI::ValidationError("--m-range", "expected A:B with A <= B");
    }
  }
  std::cout << sweep_header << "\n";
  for (long long cur = from; cur <= to; ++cur) {
    emit_sweep_row(std::cout, cur, n, k, witness);
  }
  Rational m0 = threshold(n, k);
  std::cerr << "k=" << k << " n=" << n << " edge range [" << lo << ", " << hi
            << "], threshold m0=" << m0.str() << "\n";
  return exit_ok;
}

int cmd_enumerate(int n, int k, bool check) {
  TightnessTable table;
  try {
    table = min_vk_table(n, k);
  } catch (const InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << "\n";
    return exit_infeasible;
  }
  std::cout << "m,min_vk,tight_lower,equal,witness_graph6\n";
  for (const auto& [m, row] : table.rows) {
    long long tight = k >= 2 ? tight_lower(m, n, k) : -1;
    std::cout << m << ',' << row.min_vk << ',' << tight << ','
              << (row.min_vk == tight ? 1 : 0) << ',' << row.witness_graph6
              << "\n";
  }
  std::cerr << "n=" << n << " k=" << k << ": " << table.total_graphs
            << " labeled minimally k-connected graphs, " << table.rows.size()
            << " edge counts\n";
  if (!check) return exit_ok;
  TightnessReport report = verify_tightness(n, k);
  if (report.ok) {
    std::cerr << "all tightness and per-graph checks pass\n";
    return exit_ok;
  }
  for (const auto& v : report.violations) {
    std::cerr << "violation: " << v.check;
    if (!v.graph6.empty()) std::cerr << " [" << v.graph6 << "]";
    std::cerr << "\n";
  }
  return exit_not_verified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Minimally k-connected graphs: bounds on the number of degree-k "
      "vertices, witness constructions, verification, and an exhaustive "
      "small-n oracle"};
  app.require_subcommand(1);

  // construct
  int c_k = 2;
  long long c_n = 0, c_m = 0;
  std::optional<std::string> c_out, c_format;
  CLI::App* construct =
      app.add_subcommand("construct", "Build a verified witness graph");
  construct->add_option("--k", c_k, "connectivity order (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000));
  construct->add_option("--n", c_n, "vertex count")->required();
  construct->add_option("--m", c_m, "edge count")->required();
  construct->add_option("--out", c_out,
                        "output file (plan sidecar written alongside)");
  construct->add_option("--format", c_format, "graph6|dimacs|json");

  // verify
  std::string v_file;
  int v_k = 2;
  bool v_separators = false;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a graph file for minimal "
                                   "k-connectivity and report structure");
  verify->add_option("file", v_file, "graph file (graph6/DIMACS/JSON)")
      ->required();
  verify->add_option("--k", v_k, "connectivity order (>= 1)")
      ->required()
      ->check(CLI::Range(1, 1000));
  verify->add_flag("--separators", v_separators,
                   "include a per-edge separator map in the report");

  // bounds
  int b_k = 2;
  long long b_n = 0;
  std::optional<long long> b_m;
  std::optional<std::string> b_range;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Emit bound rows as CSV for one or more m");
  bounds->add_option("--k", b_k, "connectivity order (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000));
  bounds->add_option("--n", b_n, "vertex count")->required();
  CLI::Option* opt_m = bounds->add_option("--m", b_m, "single edge count");
  bounds->add_option("--m-range", b_range, "edge count range A:B")
      ->excludes(opt_m);

  // sweep
  int s_k = 2;
  long long s_n = 0;
  bool s_witness = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "CSV rows for every m in the edge range");
  sweep->add_option("--k", s_k, "connectivity order (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000));
  sweep->add_option("--n", s_n, "vertex count")->required();
  sweep->add_flag("--witness", s_witness,
                  "construct and verify a witness at each feasible m");

  // enumerate
  int e_n = 0, e_k = 2;
  bool e_check = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive small-n oracle table (n <= 8)");
  enumerate->add_option("--n", e_n, "vertex count (<= 8)")->required();
  enumerate->add_option("--k", e_k, "connectivity order")->required();
  enumerate->add_flag("--check", e_check,
                      "verify every bound and lemma against the enumeration");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      return cmd_construct(c_k, c_n, c_m, c_out, c_format);
    }
    if (verify->parsed()) return cmd_verify(v_file, v_k, v_separators);
    if (bounds->parsed()) return cmd_bounds(b_k, b_n, b_m, b_range, false);
    if (sweep->parsed()) {
      return cmd_bounds(s_k, s_n, std::nullopt, std::nullopt, s_witness);
    }
    if (enumerate->parsed()) return cmd_enumerate(e_n, e_k, e_check);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return exit_parse;
  } catch (const InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << "\n";
    return exit_infeasible;
  } catch (const VerificationError& err) {
    std::cerr << "verification failure: " << err.what() << "\n";
    return exit_not_verified;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_not_verified;
  }
  return exit_ok;
}
