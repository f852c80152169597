#include <CLI11.hpp>

#include <nlohmann/json.hpp>

#include "netobs/centrality.hpp"
#include "netobs/colorability.hpp"
#include "netobs/dot.hpp"
#include "netobs/network.hpp"
#include "netobs/placement.hpp"
#include "netobs/verify.hpp"
#include "netobs/wdn.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace netobs;
using nlohmann::json;

bool log_debug() {
  const char* level = std::getenv("NETOBS_LOG");
  return level != nullptr && std::string(level) == "debug";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ModelInput {
  PatternMatrix pattern;                // square A for structural workflows
  std::optional<NetworkModel> network;  // present when a network was given
};

// --network accepts either a network JSON document or a pattern text file.
ModelInput load_model(const std::string& path) {
  const std::string text = slurp(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    NetworkModel net = network_from_json(text);
    return {derive_wdn_pattern(net), std::move(net)};
  }
  return {PatternMatrix::parse(text), std::nullopt};
}

std::vector<int> parse_sensors(const std::string& csv, int n_states) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    if (cell.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cell, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid sensor index '" + cell + "'");
    }
    if (pos != cell.size())
      throw std::invalid_argument("invalid sensor index '" + cell + "'");
    if (v < 1 || v > n_states)
      throw std::invalid_argument("sensor index " + std::to_string(v) +
                                  " out of range 1.." +
                                  std::to_string(n_states));
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("duplicate sensor index");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

json trace_json(const ColoringState& s) {
  json arr = json::array();
  for (const auto& e : s.trace)
    arr.push_back({{"round", e.round},
                   {"forcer", e.forcer + 1},
                   {"forced", e.forced + 1}});
  return arr;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_check(const std::string& network_path, const std::string& sensors_csv,
              int trials, std::uint64_t seed, const std::string& out_path,
              const std::string& format) {
  const auto model = load_model(network_path);
  const auto sensors = parse_sensors(sensors_csv, model.pattern.rows());
  const auto c = sensors_pattern(sensors, model.pattern.rows());

  if (trials > 0) {
    const auto report = cross_validate(model.pattern, c, trials, seed);
    emit(report_to_json(report) + "\n", out_path);
    return report.structural.observable ? 0 : 1;
  }

  const auto verdict = check_observability(model.pattern, c);
  if (format == "json") {
    json j;
    j["observable"] = verdict.observable;
    j["colorable_m"] = verdict.colorable_m;
    j["colorable_mbar"] = verdict.colorable_mbar;
    j["trace_m"] = trace_json(verdict.trace_m);
    j["trace_mbar"] = trace_json(verdict.trace_mbar);
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::ostringstream os;
    os << "observable: " << (verdict.observable ? "yes" : "no") << "\n"
       << "colorable(M): " << (verdict.colorable_m ? "yes" : "no") << "\n"
       << "colorable(Mbar): " << (verdict.colorable_mbar ? "yes" : "no")
       << "\n";
    os << "trace(M):\n" << trace_to_jsonl(verdict.trace_m);
    os << "trace(Mbar):\n" << trace_to_jsonl(verdict.trace_mbar);
    emit(os.str(), out_path);
  }
  return verdict.observable ? 0 : 1;
}

int cmd_color(const std::string& network_path, const std::string& out_path) {
  const std::string text = slurp(network_path);
  const auto m = PatternMatrix::parse(text);
  const auto r = color(m);
  emit(trace_to_jsonl(r.state), out_path);
  std::cerr << "colorable: " << (r.colorable ? "yes" : "no") << "\n";
  return r.colorable ? 0 : 1;
}

int cmd_place(const std::string& network_path, const std::string& costs_path,
              double eps, const std::string& out_path,
              const std::string& format) {
  const auto model = load_model(network_path);
  const auto costs = load_costs(costs_path, model.pattern.rows());
  PlacementOptions opts;
  opts.eps = eps;
  const auto result = place_sensors(model.pattern, costs, opts);

  if (log_debug())
    std::cerr << "place: evaluated " << result.combinations_evaluated
              << " combinations in " << result.wall_time_seconds << " s\n";

  if (format == "text") {
    std::ostringstream os;
    const auto groups = group_by_cost(costs.c_n, eps);
    os << "groups (ascending cost):\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
      os << "  " << g + 1 << ":";
      for (int s : groups[g]) os << " " << s + 1;
      os << "\n";
    }
    os << "terminating group: " << result.terminating_group
       << ", subset size: " << result.terminating_k << "\n";
    os << "accepted:";
    for (const auto& set : result.accepted_states) {
      os << " {";
      for (std::size_t i = 0; i < set.size(); ++i)
        os << (i ? "," : "") << set[i] + 1;
      os << "}";
    }
    os << "\n";
    emit(os.str(), out_path);
  } else {
    emit(placement_to_json(result) + "\n", out_path);
  }
  return 0;
}

int cmd_pagerank(const std::string& network_path, double alpha,
                 const std::string& graph_kind, const std::string& out_path) {
  const auto model = load_model(network_path);
  PageRankConfig cfg;
  cfg.alpha = alpha;
  RealMatrix adj;
  if (graph_kind == "physical") {
    if (!model.network)
      throw std::invalid_argument(
          "pagerank --graph physical needs a network JSON input");
    // pagerank() expects adj(i,j) = 1 for an edge j -> i; the network
    // adjacency stores tail -> head row-wise
    adj = adjacency_and_incidence(*model.network).first.transpose();
  } else {
    adj = pattern_adjacency(model.pattern);
  }
  const RealVector pr = pagerank(adj, cfg);
  const RealVector cost = pagerank_cost(pr);
  std::ostringstream os;
  os << "node,pr,cost\n";
  for (int i = 0; i < pr.size(); ++i)
    os << i + 1 << "," << format_double(pr(i)) << ","
       << format_double(cost(i)) << "\n";
  emit(os.str(), out_path);
  return 0;
}

int cmd_oracle(const std::string& network_path, const std::string& out_path) {
  const auto model = load_model(network_path);
  const auto result = brute_force_minimum(model.pattern);
  json j;
  j["min_k"] = result.min_k;
  j["min_sets"] = json::array();
  for (const auto& set : result.min_sets) {
    json s = json::array();
    for (int v : set) s.push_back(v + 1);
    j["min_sets"].push_back(s);
  }
  j["combinations_evaluated"] = result.combinations_evaluated;
  emit(j.dump(2) + "\n", out_path);
  return 0;
}

int cmd_simulate(const std::string& network_path, const std::string& x0_csv,
                 double dt, int steps, const std::string& out_path) {
  const auto model = load_model(network_path);
  if (!model.network)
    throw std::invalid_argument("simulate needs a network JSON input");
  const int n = model.network->state_count();
  RealVector x0(n);
  {
    std::istringstream in(x0_csv);
    std::string cell;
    int i = 0;
    while (std::getline(in, cell, ',')) {
      if (i >= n) throw std::invalid_argument("--x0 has too many entries");
      x0(i++) = std::stod(cell);
    }
    if (i != n)
      throw std::invalid_argument("--x0 needs " + std::to_string(n) +
                                  " entries");
  }
  const auto run = simulate_rk4(*model.network, x0, dt, steps);
  std::ostringstream os;
  os << "t";
  for (int i = 0; i < n; ++i) os << ",x" << i + 1;
  os << "\n";
  for (std::size_t s = 0; s < run.times.size(); ++s) {
    os << format_double(run.times[s]);
    for (int i = 0; i < n; ++i) os << "," << format_double(run.states[s](i));
    os << "\n";
  }
  emit(os.str(), out_path);
  return 0;
}

int cmd_export_dot(const std::string& network_path,
                   const std::string& sensors_csv,
                   const std::string& costs_path,
                   const std::string& out_path) {
  const std::string text = slurp(network_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  PatternMatrix m =
      (first != std::string::npos && text[first] == '{')
          ? derive_wdn_pattern(network_from_json(text))
          : PatternMatrix::parse(text);

  DotOptions opts;
  if (!sensors_csv.empty()) {
    if (!m.square())
      throw std::invalid_argument("--sensors requires a square pattern");
    const auto sensors = parse_sensors(sensors_csv, m.rows());
    m = combine_m(m, sensors_pattern(sensors, m.rows()));
  }
  if (!m.square()) opts.show_coloring = true;
  if (!costs_path.empty()) {
    const auto costs = load_costs(costs_path, m.rows());
    opts.costs = normalize_cost(costs.c_n);
  }
  emit(to_dot(m, opts), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "netobs - strong structural observability and sensor placement for "
      "networked dynamical systems"};
  app.require_subcommand(1);

  std::string network_path, costs_path, sensors_csv, out_path;
  std::string format = "json";
  double alpha = 0.85;
  double eps = 1e-9;
  std::uint64_t seed = 1;
  int trials = 0;
  double dt = 1e-3;
  int steps = 1000;
  std::string x0_csv;
  std::string graph_kind = "pattern";

  auto* check = app.add_subcommand(
      "check", "Decide observability of a pattern or network with sensors");
  check->add_option("--network", network_path, "network JSON or pattern file")
      ->required();
  check->add_option("--sensors", sensors_csv,
                    "comma-separated 1-based state indices");
  check->add_option("--trials", trials,
                    "cross-validate with this many seeded realizations");
  check->add_option("--seed", seed, "base seed for realization sampling");
  check->add_option("--out", out_path, "output file (default stdout)");
  check->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* colorcmd = app.add_subcommand(
      "color", "Run the color-change rule on a combined pattern matrix");
  colorcmd->add_option("--network", network_path, "combined pattern file")
      ->required();
  colorcmd->add_option("--out", out_path, "output file (default stdout)");

  auto* place = app.add_subcommand(
      "place", "Search a minimal-cost observable sensor placement");
  place->add_option("--network", network_path, "network JSON or pattern file")
      ->required();
  place->add_option("--costs", costs_path, "cost CSV")->required();
  place->add_option("--eps", eps, "cost grouping tolerance");
  place->add_option("--out", out_path, "output file (default stdout)");
  place->add_option("--format", format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* pagerank = app.add_subcommand(
      "pagerank", "PageRank centrality and inverse cost per state");
  pagerank->add_option("--network", network_path,
                       "network JSON or pattern file")
      ->required();
  pagerank->add_option("--alpha", alpha, "damping factor");
  pagerank->add_option("--graph", graph_kind, "pattern|physical")
      ->check(CLI::IsMember({"pattern", "physical"}));
  pagerank->add_option("--out", out_path, "output file (default stdout)");

  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustive minimal sensor placement (certification oracle)");
  oracle->add_option("--network", network_path,
                     "network JSON or pattern file")
      ->required();
  oracle->add_option("--out", out_path, "output file (default stdout)");

  auto* simulate = app.add_subcommand(
      "simulate", "Fixed-step RK4 run of the hydraulic model");
  simulate->add_option("--network", network_path, "network JSON with params")
      ->required();
  simulate->add_option("--x0", x0_csv, "initial state, comma separated")
      ->required();
  simulate->add_option("--dt", dt, "time step");
  simulate->add_option("--steps", steps, "number of steps");
  simulate->add_option("--out", out_path, "output file (default stdout)");

  auto* dot = app.add_subcommand("export-dot",
                                 "Emit the pattern graph as a DOT digraph");
  dot->add_option("--network", network_path,
                  "network JSON, pattern, or combined pattern file")
      ->required();
  dot->add_option("--sensors", sensors_csv,
                  "comma-separated 1-based state indices");
  dot->add_option("--costs", costs_path, "cost CSV for node shading");
  dot->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return cmd_check(network_path, sensors_csv, trials, seed, out_path,
                       format);
    if (colorcmd->parsed()) return cmd_color(network_path, out_path);
    if (place->parsed())
      return cmd_place(network_path, costs_path, eps, out_path, format);
    if (pagerank->parsed())
      return cmd_pagerank(network_path, alpha, graph_kind, out_path);
    if (oracle->parsed()) return cmd_oracle(network_path, out_path);
    if (simulate->parsed())
      return cmd_simulate(network_path, x0_csv, dt, steps, out_path);
    if (dot->parsed())
      return cmd_export_dot(network_path, sensors_csv, costs_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
