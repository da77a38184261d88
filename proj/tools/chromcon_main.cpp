// chromcon: verification harness for highly connected subgraphs with large
// chromatic number. Subcommands run the constructions, pipelines, and
// catalog sweeps; every reported object is re-verified before emission.
//
// Exit codes: 0 all assertions passed; 1 a verified assertion failed
// (report retained); 2 input error; 3 budget exhausted / indeterminate.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromcon/catalog.hpp"
#include "chromcon/connectivity.hpp"
#include "chromcon/constructions.hpp"
#include "chromcon/extension.hpp"
#include "chromcon/extraction.hpp"
#include "chromcon/generators.hpp"
#include "chromcon/graph_io.hpp"
#include "chromcon/inextensibility.hpp"
#include "chromcon/oracle.hpp"
#include "chromcon/serialize.hpp"
#include "chromcon/solver.hpp"
#include "chromcon/version.hpp"

using nlohmann::json;
using namespace chromcon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIndeterminate = 3;

struct Budgets {
  std::int64_t nodes = SolveBudget{}.max_nodes;
  std::int64_t templates = EnumerationBudget{}.max_templates;
  std::int64_t subsets = SubgraphBudget{}.max_subsets;

  SolveBudget solve() const { return SolveBudget{nodes}; }
  EnumerationBudget enumeration() const { return EnumerationBudget{templates, solve()}; }
  SubgraphBudget subgraph() const { return SubgraphBudget{subsets, solve()}; }
};

std::int64_t env_or(const char* name, std::int64_t fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoll(value);
  } catch (...) {
    throw std::invalid_argument(std::string("bad integer in environment variable ") + name);
  }
}

class Report {
 public:
  Report(std::string command, std::uint64_t seed) {
    body_["schema_version"] = kReportSchemaVersion;
    body_["artifact_version"] = kVersion;
    body_["command"] = std::move(command);
    body_["parameters"] = json::object();
    body_["seed"] = seed;
    body_["results"] = json::array();
    body_["assertions"] = json::array();
    body_["timings_ms"] = json::object();
  }

  void param(const std::string& key, const json& value) { body_["parameters"][key] = value; }
  void result(const json& value) { body_["results"].push_back(value); }

  bool check(const std::string& label, bool ok, const std::string& detail = {}) {
    json entry{{"label", label}, {"ok", ok}};
    if (!detail.empty()) entry["detail"] = detail;
    body_["assertions"].push_back(entry);
    all_ok_ &= ok;
    return ok;
  }

  void absorb_trace(const TraceLog& trace) {
    for (const StageTrace& stage : trace.stages())
      for (const CheckRecord& c : stage.checks) check(c.label, c.ok, c.detail);
    body_["trace"] = json::parse(trace_to_json(trace));
  }

  void timing(const std::string& key, double ms) { body_["timings_ms"][key] = ms; }

  bool all_ok() const { return all_ok_; }

  int emit(const std::string& out_path) const {
    const std::string text = body_.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write report to " << out_path << "\n";
        return kExitInputError;
      }
      out << text;
      std::cerr << "report written to " << out_path << "\n";
    }
    return all_ok_ ? kExitOk : kExitAssertionFailed;
  }

 private:
  json body_;
  bool all_ok_ = true;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return from_graph6(line);
    }
    throw std::invalid_argument("no graph6 line in " + path);
  }
  return from_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json graph_json(const Graph& g) {
  return json{{"n", g.vertex_count()}, {"graph6", to_graph6(g)}};
}

std::vector<std::vector<int>> chi_partition(const Graph& g, int chi, const SolveBudget& budget) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(chi));
  if (chi == 0) return classes;
  const auto coloring = find_coloring(g, ColorSet{chi}, budget);
  if (!coloring) throw std::logic_error("chi-coloring disappeared");
  for (int v = 0; v < g.vertex_count(); ++v)
    classes[static_cast<std::size_t>(coloring->colors[v] - 1)].push_back(v);
  return classes;
}

std::vector<Graph> exhaustive_catalog(int n_max) {
  if (n_max < 0 || n_max > 9)
    throw std::invalid_argument("exhaustive catalog supported for nmax <= 9");
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (Graph& g : all_graphs(n)) out.push_back(std::move(g));
  return out;
}

int run_demo_star(int k, const Budgets& budgets, Report& report) {
  const Stopwatch clock;
  const ConstructionInstance inst = star_witness(k);
  report.param("k", k);
  json res = graph_json(inst.graph);
  res["colors"] = inst.colors.size;
  res["cost"] = k_cost(inst.tmpl, k);
  res["template"] = json::parse(template_to_json(inst.tmpl));
  const bool unsat = !find_respecting_coloring(inst.graph, inst.tmpl, inst.colors,
                                               budgets.solve());
  res["respecting_coloring_exists"] = !unsat;
  report.result(res);
  report.check("star:palette-size", inst.colors.size == 3 * k - 2);
  report.check("star:cost-bound", k_cost(inst.tmpl, k) < 2 * k * k);
  report.check("star:unsat", unsat);
  report.check("star:witness", verify_witness(inst.graph, inst.tmpl, k, inst.colors,
                                              budgets.solve()));
  report.check("star:chromatic",
               chromatic_number(inst.graph, budgets.solve()) == inst.expected_chi);
  report.check("star:no-biconnected-subgraph",
               !find_connected_chromatic_subgraph(inst.graph, 2, 0, 0, budgets.subgraph())
                    .has_value());
  report.timing("total", clock.ms());
  return kExitOk;
}

int run_demo_h(int k, int csize, const Budgets& budgets, Report& report) {
  const Stopwatch clock;
  const ConstructionInstance inst = h_construction(k, csize);
  report.param("k", k);
  report.param("colors", csize);
  json res = graph_json(inst.graph);
  res["cost"] = k_cost(inst.tmpl, k);
  res["template"] = json::parse(template_to_json(inst.tmpl));
  const int chi = chromatic_number(inst.graph, budgets.solve());
  res["chi"] = chi;
  report.result(res);
  report.check("joined:chromatic", chi == csize - 2 * k + 3,
               "chi=" + std::to_string(chi));
  report.check("joined:witness", verify_witness(inst.graph, inst.tmpl, k, inst.colors,
                                                budgets.solve()));
  report.timing("total", clock.ms());
  return kExitOk;
}

int run_extend(const std::string& variant, const std::string& graph_path,
               const std::string& template_path, int colors, int k, const Budgets& budgets,
               Report& report) {
  const Stopwatch clock;
  const Graph g = load_graph(graph_path);
  const ColorSet palette{colors};
  const Template tmpl = template_path.empty()
                            ? empty_template(g.vertex_count())
                            : template_from_json(read_file(template_path), g, palette);
  report.param("variant", variant);
  report.param("graph", graph_path);
  report.param("colors", colors);
  report.param("k", k);

  const int chi = chromatic_number(g, budgets.solve());
  const auto partition = chi_partition(g, chi, budgets.solve());
  const ExtensionResult run = variant == "316k"
                                  ? extend_316k(g, tmpl, partition, k, palette)
                                  : extend_4k(g, tmpl, partition, k, palette);
  json res = graph_json(g);
  res["chi"] = chi;
  res["coloring"] = json::parse(coloring_to_json(run.coloring));
  res["final_branch"] = run.final_branch;
  report.result(res);
  report.absorb_trace(run.trace);
  report.check("extend:fallback-unused", !run.used_fallback);
  report.check("extend:verified-proper", is_proper(g, run.coloring, palette));
  report.check("extend:verified-respecting", respects(g, tmpl, run.coloring));
  report.timing("total", clock.ms());
  return kExitOk;
}

int run_minimalize(const std::string& graph_path, int k, int colors, const std::string& mode,
                   const Budgets& budgets, Report& report) {
  const Stopwatch clock;
  const Graph g = load_graph(graph_path);
  report.param("graph", graph_path);
  report.param("k", k);
  report.param("colors", colors);
  report.param("mode", mode);
  const ShrinkMode shrink = mode == "exact" ? ShrinkMode::exact : ShrinkMode::heuristic;
  const auto m = minimal_inextensible_subgraph(g, k, ColorSet{colors}, shrink, std::nullopt,
                                               budgets.enumeration());
  json res;
  res["vertices"] = m.vertices;
  res["subgraph"] = graph_json(m.subgraph);
  res["witness_template"] = json::parse(template_to_json(m.witness.tmpl));
  res["witness_cost"] = m.witness.cost;
  res["certified_minimal"] = m.minimal_certified;
  res["budget_exhausted"] = m.budget_exhausted;
  report.result(res);
  report.check("minimal:witness",
               verify_witness(m.subgraph, m.witness.tmpl, k, ColorSet{colors},
                              budgets.solve()));
  if (colors >= 3 * k - 1 && m.minimal_certified) {
    report.check("minimal:order", m.order_bound_ok);
    report.check("minimal:connectivity", m.connectivity_ok);
  } else {
    report.check("minimal:order-observed", m.order_bound_ok,
                 m.order_bound_ok ? "" : "not guaranteed without certification");
    report.check("minimal:connectivity-observed", m.connectivity_ok,
                 m.connectivity_ok ? "" : "not guaranteed without certification");
  }
  report.timing("total", clock.ms());
  return m.budget_exhausted ? kExitIndeterminate : kExitOk;
}

int run_extract(const std::string& graph_path, int k, const std::string& variant,
                const std::string& mode, const Budgets& budgets, Report& report) {
  const Stopwatch clock;
  const Graph g = load_graph(graph_path);
  report.param("graph", graph_path);
  report.param("k", k);
  report.param("variant", variant);
  report.param("mode", mode);
  const ExtractVariant var =
      variant == "prop_4k" ? ExtractVariant::weak : ExtractVariant::strong;
  const ShrinkMode shrink = mode == "exact" ? ShrinkMode::exact : ShrinkMode::heuristic;
  const auto out = extract_subgraph(g, k, var, shrink, budgets.enumeration());
  json res;
  res["input"] = graph_json(g);
  res["input_chi"] = out.input_chi;
  res["palette"] = out.palette;
  res["vertices"] = out.vertices;
  res["subgraph"] = graph_json(out.subgraph);
  res["subgraph_chi"] = out.subgraph_chi;
  res["witness_template"] = json::parse(template_to_json(out.witness.tmpl));
  res["certified_minimal"] = out.certified_minimal;
  res["budget_exhausted"] = out.budget_exhausted;
  report.result(res);
  report.absorb_trace(out.trace);
  report.check("extract:verified-witness",
               verify_witness(out.subgraph, out.witness.tmpl, k, ColorSet{out.palette},
                              budgets.solve()));
  report.timing("total", clock.ms());
  return out.budget_exhausted ? kExitIndeterminate : kExitOk;
}

int run_verify_theorem(int k, int n_max, bool exhaustive, const std::string& catalog_path,
                       const std::string& variant, const Budgets& budgets, Report& report) {
  const Stopwatch clock;
  report.param("k", k);
  report.param("nmax", n_max);
  report.param("variant", variant);
  const ExtractVariant var =
      variant == "prop_4k" ? ExtractVariant::weak : ExtractVariant::strong;
  std::vector<Graph> catalog;
  if (!catalog_path.empty()) {
    std::ifstream in(catalog_path);
    if (!in) throw std::invalid_argument("cannot open catalog " + catalog_path);
    catalog = read_graph6_lines(in);
  } else if (exhaustive) {
    catalog = exhaustive_catalog(n_max);
  } else {
    throw std::invalid_argument("verify-theorem needs --exhaustive or --catalog FILE");
  }

  long long holds = 0, vacuous = 0;
  json failures = json::array();
  for (const Graph& g : catalog) {
    if (g.vertex_count() > n_max) continue;
    const OracleOutcome out = theorem_oracle(g, k, var, budgets.subgraph());
    switch (out.status) {
      case OracleStatus::holds: ++holds; break;
      case OracleStatus::vacuous: ++vacuous; break;
      case OracleStatus::fails: failures.push_back(graph_json(g)); break;
    }
  }
  json res;
  res["graphs"] = catalog.size();
  res["holds"] = holds;
  res["vacuous"] = vacuous;
  res["failures"] = failures;
  report.result(res);
  report.check("theorem:no-counterexample", failures.empty(),
               failures.empty() ? "" : "potential counterexamples retained in report");
  report.timing("total", clock.ms());
  return kExitOk;
}

int run_search_g(int k, int m, int n_max, bool exhaustive, const std::string& catalog_path,
                 long long sample, double sample_p, std::uint64_t seed,
                 const std::string& format, std::string& out_path, const Budgets& budgets,
                 Report& report) {
  const Stopwatch clock;
  report.param("k", k);
  report.param("m", m);
  report.param("nmax", n_max);
  std::vector<Graph> catalog;
  if (!catalog_path.empty()) {
    std::ifstream in(catalog_path);
    if (!in) throw std::invalid_argument("cannot open catalog " + catalog_path);
    catalog = read_graph6_lines(in);
  } else if (exhaustive) {
    catalog = exhaustive_catalog(n_max);
  } else if (sample > 0) {
    std::uint64_t state = seed;
    for (long long i = 0; i < sample; ++i) {
      const int n = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n_max));
      catalog.push_back(random_graph(n, sample_p, splitmix64(state)));
    }
  } else {
    throw std::invalid_argument("search-g needs --exhaustive, --catalog FILE, or --sample N");
  }

  const auto records = empirical_g(k, m, catalog, budgets.subgraph());
  report.result(json::parse(gbound_records_to_json(records)));
  bool violation = false;
  for (const GBoundRecord& rec : records) violation |= rec.upper_bound_violation;
  report.check("gbound:upper-bound-consistent", !violation);
  if (format == "csv" && !out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << gbound_records_to_csv(records);
    std::cerr << "record table written to " << out_path << "\n";
    out_path.clear();  // the JSON report then goes to stdout
  }
  report.timing("total", clock.ms());
  return kExitOk;
}

int run_catalog(int n, bool connected_only, const std::string& out_path) {
  const std::vector<Graph> graphs = connected_only ? connected_graphs(n) : all_graphs(n);
  std::ostringstream text;
  for (const Graph& g : graphs) text << to_graph6(g) << '\n';
  if (out_path.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text.str();
  }
  std::cerr << graphs.size() << (connected_only ? " connected" : "")
            << " graphs on " << n << " vertices\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromcon: exact search for highly connected subgraphs with large "
               "chromatic number"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed/--out/--budget-* may follow the subcommand

  Budgets budgets;
  budgets.nodes = env_or("CHROMCON_BUDGET_NODES", budgets.nodes);
  budgets.templates = env_or("CHROMCON_BUDGET_TEMPLATES", budgets.templates);
  budgets.subsets = env_or("CHROMCON_BUDGET_SUBSETS", budgets.subsets);
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "seed for sampled runs");
  app.add_option("--out", out_path, "write the report (or table) to this path");
  app.add_option("--format", format, "report table format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget-nodes", budgets.nodes, "solver node budget");
  app.add_option("--budget-templates", budgets.templates, "template enumeration budget");
  app.add_option("--budget-subsets", budgets.subsets, "subgraph enumeration budget");

  int k = 1, colors = 0, n_max = 7, n = 5, m = 2;
  long long sample = 0;
  double sample_p = 0.5;
  bool exhaustive = false, connected_only = false;
  std::string graph_path, template_path, variant = "thm_main", extend_variant = "316k",
              mode = "heuristic", catalog_path;

  CLI::App* demo_star = app.add_subcommand("demo-star", "star tightness example");
  demo_star->add_option("--k", k, "connectivity parameter")->required();

  CLI::App* demo_h = app.add_subcommand("demo-h", "joined-clique tightness example");
  demo_h->add_option("--k", k, "connectivity parameter")->required();
  demo_h->add_option("--colors", colors, "palette size (>= 2k-1)")->required();

  CLI::App* extend = app.add_subcommand("extend", "build a respecting coloring");
  extend->add_option("--variant", extend_variant, "pipeline: 4k or 316k")
      ->check(CLI::IsMember({"4k", "316k"}));
  extend->add_option("--graph", graph_path, "graph file (.g6 or edge list)")->required();
  extend->add_option("--template", template_path, "template JSON file");
  extend->add_option("--colors", colors, "palette size")->required();
  extend->add_option("--k", k, "connectivity parameter")->required();

  CLI::App* minimalize = app.add_subcommand("minimalize", "shrink to a minimally "
                                                          "inextensible subgraph");
  minimalize->add_option("--graph", graph_path, "graph file")->required();
  minimalize->add_option("--k", k, "connectivity parameter")->required();
  minimalize->add_option("--colors", colors, "palette size")->required();
  minimalize->add_option("--mode", mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));

  CLI::App* extract = app.add_subcommand("extract", "extract a highly connected "
                                                    "chromatic subgraph");
  extract->add_option("--graph", graph_path, "graph file")->required();
  extract->add_option("--k", k, "connectivity parameter")->required();
  extract->add_option("--variant", variant, "thm_main or prop_4k")
      ->check(CLI::IsMember({"thm_main", "prop_4k"}));
  extract->add_option("--mode", mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));

  CLI::App* verify = app.add_subcommand("verify-theorem", "sweep the guarantee over a "
                                                          "catalog");
  verify->add_option("--k", k, "connectivity parameter")->required();
  verify->add_option("--nmax", n_max, "largest order to scan");
  verify->add_flag("--exhaustive", exhaustive, "generate the full catalog up to nmax");
  verify->add_option("--catalog", catalog_path, "graph6 catalog file");
  verify->add_option("--variant", variant, "thm_main or prop_4k")
      ->check(CLI::IsMember({"thm_main", "prop_4k"}));

  CLI::App* search = app.add_subcommand("search-g", "scan for chromatic-connectivity "
                                                    "bound witnesses");
  search->add_option("--k", k, "connectivity parameter")->required();
  search->add_option("--m", m, "target chromatic number")->required();
  search->add_option("--nmax", n_max, "largest order to scan");
  search->add_flag("--exhaustive", exhaustive, "generate the full catalog up to nmax");
  search->add_option("--catalog", catalog_path, "graph6 catalog file");
  search->add_option("--sample", sample, "number of seeded random graphs instead");
  search->add_option("--p", sample_p, "edge probability for sampled graphs");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "emit a graph6 catalog");
  catalog_cmd->add_option("--n", n, "vertex count")->required();
  catalog_cmd->add_flag("--connected", connected_only, "connected graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command, seed);
  try {
    int status = kExitOk;
    if (demo_star->parsed()) {
      status = run_demo_star(k, budgets, report);
    } else if (demo_h->parsed()) {
      status = run_demo_h(k, colors, budgets, report);
    } else if (extend->parsed()) {
      status = run_extend(extend_variant, graph_path, template_path, colors, k, budgets,
                          report);
    } else if (minimalize->parsed()) {
      status = run_minimalize(graph_path, k, colors, mode, budgets, report);
    } else if (extract->parsed()) {
      status = run_extract(graph_path, k, variant, mode, budgets, report);
    } else if (verify->parsed()) {
      status = run_verify_theorem(k, n_max, exhaustive, catalog_path, variant, budgets,
                                  report);
    } else if (search->parsed()) {
      status = run_search_g(k, m, n_max, exhaustive, catalog_path, sample, sample_p, seed,
                            format, out_path, budgets, report);
    } else if (catalog_cmd->parsed()) {
      return run_catalog(n, connected_only, out_path);
    }
    const int report_status = report.emit(out_path);
    return status == kExitOk ? report_status : status;
  } catch (const BudgetExhausted& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    report.check("run:within-budget", false, e.what());
    report.emit(out_path);
    return kExitIndeterminate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "verified failure: " << e.what() << "\n";
    report.check("run:internal-consistency", false, e.what());
    report.emit(out_path);
    return kExitAssertionFailed;
  }
}
