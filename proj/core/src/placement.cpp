#include "netobs/placement.hpp"

#include "netobs/wdn.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netobs {

using nlohmann::json;

RealVector normalize_cost(const RealVector& c) {
  if (c.size() == 0) throw std::invalid_argument("normalize_cost: empty");
  const double lo = c.minCoeff();
  const double hi = c.maxCoeff();
  if (hi == lo) return RealVector::Zero(c.size());
  return (c.array() - lo) / (hi - lo);
}

namespace {

void require_same_size(const RealVector& a, const RealVector& b,
                       const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string("cost vector size mismatch: ") +
                                what);
}

}  // namespace

CostTable CostTable::from_components(const RealVector& c_out,
                                     const RealVector& c_in,
                                     const RealVector& c_pr,
                                     const RealVector& c_ind,
                                     const RealVector& weights) {
  require_same_size(c_out, c_in, "c_in");
  require_same_size(c_out, c_pr, "c_pr");
  require_same_size(c_out, c_ind, "c_ind");
  RealVector w = weights;
  if (w.size() == 0) w = RealVector::Constant(4, 0.25);
  if (w.size() != 4)
    throw std::invalid_argument("aggregate weights must have 4 entries");
  CostTable t;
  t.c_out = c_out;
  t.c_in = c_in;
  t.c_pr = c_pr;
  t.c_ind = c_ind;
  t.c_out_n = normalize_cost(c_out);
  t.c_in_n = normalize_cost(c_in);
  t.c_pr_n = normalize_cost(c_pr);
  t.c_ind_n = normalize_cost(c_ind);
  t.c_n = w(0) * t.c_pr_n + w(1) * t.c_in_n + w(2) * t.c_out_n +
          w(3) * t.c_ind_n;
  return t;
}

CostTable CostTable::with_supplied_aggregate(const RealVector& c_out,
                                             const RealVector& c_in,
                                             const RealVector& c_pr,
                                             const RealVector& c_ind,
                                             const RealVector& c_n) {
  CostTable t = from_components(c_out, c_in, c_pr, c_ind);
  require_same_size(c_out, c_n, "c_n");
  t.c_n = c_n;
  t.aggregate = CostProvenance::Supplied;
  return t;
}

std::vector<std::vector<int>> group_by_cost(const RealVector& c_n,
                                            double eps) {
  if (eps < 0.0) throw std::invalid_argument("group_by_cost: eps < 0");
  const int n = static_cast<int>(c_n.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c_n(a) < c_n(b); });
  std::vector<std::vector<int>> groups;
  double rep = 0.0;
  for (int idx : order) {
    if (groups.empty() || c_n(idx) - rep > eps) {
      groups.push_back({idx});
      rep = c_n(idx);
    } else {
      groups.back().push_back(idx);
    }
  }
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return groups;
}

namespace {

// Lexicographically next k-combination of {0..n-1}; `comb` must be sorted.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - (k - i)) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> full_range(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

PlacementResult place_sensors(const PatternMatrix& a, const CostTable& costs,
                              const PlacementOptions& opts) {
  if (!a.square())
    throw std::invalid_argument("place_sensors: pattern must be square");
  if (costs.states() != a.rows())
    throw std::invalid_argument("place_sensors: cost length mismatch");
  const auto start = std::chrono::steady_clock::now();
  const int nx = a.rows();

  PlacementResult result;
  const auto groups = group_by_cost(costs.c_n, opts.eps);
  std::set<std::vector<int>> memo;

  std::vector<int> pool;
  for (std::size_t gi = 0; gi < groups.size() && result.accepted.empty();
       ++gi) {
    const auto& group = groups[gi];
    pool.insert(pool.end(), group.begin(), group.end());
    std::sort(pool.begin(), pool.end());
    const int pool_size = static_cast<int>(pool.size());

    for (int k = 1; k <= pool_size && result.accepted.empty(); ++k) {
      std::vector<int> comb(k);
      std::iota(comb.begin(), comb.end(), 0);
      do {
        std::vector<int> subset(k);
        for (int i = 0; i < k; ++i) subset[i] = pool[comb[i]];
        const bool touches_group =
            std::any_of(subset.begin(), subset.end(), [&](int s) {
              return std::binary_search(group.begin(), group.end(), s);
            });
        if (!touches_group) continue;
        if (opts.use_memo && !memo.insert(subset).second) continue;
        ++result.combinations_evaluated;
        PatternMatrix c = sensors_pattern(subset, nx);
        if (check_observability(a, c).observable) {
          result.accepted.push_back(std::move(c));
          result.accepted_states.push_back(subset);
          result.terminating_group = static_cast<int>(gi) + 1;
          result.terminating_k = k;
        } else {
          ++result.rejected_count;
        }
      } while (next_combination(comb, pool_size));
    }
  }

  if (result.accepted.empty()) {
    // Guaranteed-observable full configuration: every state gets a sensor.
    const auto all = full_range(nx);
    result.accepted.push_back(sensors_pattern(all, nx));
    result.accepted_states.push_back(all);
    result.terminating_group = static_cast<int>(groups.size());
    result.terminating_k = nx;
    result.fallback = true;
  }

  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

BruteForceResult brute_force_minimum(const PatternMatrix& a, int state_limit) {
  if (!a.square())
    throw std::invalid_argument("brute_force_minimum: pattern must be square");
  const int nx = a.rows();
  if (nx > state_limit)
    throw std::invalid_argument("brute_force_minimum: size limit exceeded");
  BruteForceResult result;
  for (int k = 1; k <= nx; ++k) {
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      ++result.combinations_evaluated;
      if (check_observability(a, sensors_pattern(comb, nx)).observable)
        result.min_sets.push_back(comb);
    } while (next_combination(comb, nx));
    if (!result.min_sets.empty()) {
      result.min_k = k;
      return result;
    }
  }
  // Unreachable: the full-sensor configuration is always colorable.
  result.min_k = nx;
  return result;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' '))
      cell.pop_back();
    std::size_t b = cell.find_first_not_of(' ');
    cells.push_back(b == std::string::npos ? "" : cell.substr(b));
  }
  return cells;
}

}  // namespace

CostTable costs_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("cost CSV: empty input");
  auto header = split_csv_line(line);
  const std::vector<std::string> base = {"state", "c_out", "c_in", "c_pr",
                                         "c_ind"};
  const bool has_cn = header.size() == 6 && header[5] == "c_n";
  if (header.size() < 5 || (header.size() == 6 && !has_cn) ||
      header.size() > 6 ||
      !std::equal(base.begin(), base.end(), header.begin()))
    throw std::invalid_argument(
        "cost CSV: header must be state,c_out,c_in,c_pr,c_ind[,c_n]");

  struct Row {
    int state;
    double out, in, pr, ind, cn;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    auto cells = split_csv_line(line);
    if (cells.empty() || (cells.size() == 1 && cells[0].empty())) continue;
    if (cells.size() != header.size())
      throw std::invalid_argument("cost CSV: wrong cell count in row");
    Row r{};
    try {
      r.state = std::stoi(cells[0]);
      r.out = std::stod(cells[1]);
      r.in = std::stod(cells[2]);
      r.pr = std::stod(cells[3]);
      r.ind = std::stod(cells[4]);
      r.cn = has_cn ? std::stod(cells[5]) : 0.0;
    } catch (const std::exception&) {
      throw std::invalid_argument("cost CSV: malformed number");
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw std::invalid_argument("cost CSV: no data rows");
  const int n = static_cast<int>(rows.size());
  RealVector c_out(n), c_in(n), c_pr(n), c_ind(n), c_n(n);
  std::vector<bool> seen(n, false);
  for (const auto& r : rows) {
    if (r.state < 1 || r.state > n || seen[r.state - 1])
      throw std::invalid_argument(
          "cost CSV: states must cover 1..n exactly once");
    seen[r.state - 1] = true;
    const int i = r.state - 1;
    c_out(i) = r.out;
    c_in(i) = r.in;
    c_pr(i) = r.pr;
    c_ind(i) = r.ind;
    c_n(i) = r.cn;
  }
  CostTable t = has_cn ? CostTable::with_supplied_aggregate(c_out, c_in, c_pr,
                                                            c_ind, c_n)
                       : CostTable::from_components(c_out, c_in, c_pr, c_ind);
  t.components = CostProvenance::Supplied;
  return t;
}

CostTable load_costs(const std::string& path, int expected_states) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cost file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  CostTable t = costs_from_csv(buf.str());
  if (expected_states > 0 && t.states() != expected_states)
    throw std::invalid_argument("cost CSV: state count mismatch");
  return t;
}

std::string placement_to_json(const PlacementResult& r) {
  json j;
  j["accepted"] = json::array();
  for (const auto& set : r.accepted_states) {
    json s = json::array();
    for (int idx : set) s.push_back(idx + 1);
    j["accepted"].push_back(s);
  }
  j["terminating"] = {{"group", r.terminating_group},
                      {"k", r.terminating_k}};
  j["combinations_evaluated"] = r.combinations_evaluated;
  j["rejected_count"] = r.rejected_count;
  j["fallback"] = r.fallback;
  return j.dump(2);
}

}  // namespace netobs
