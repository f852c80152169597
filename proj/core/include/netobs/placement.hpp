#pragma once

#include "netobs/colorability.hpp"
#include "netobs/pattern.hpp"

#include <string>
#include <vector>

namespace netobs {

enum class CostProvenance { Computed, Supplied };

/// Per-state sensor-cost table: the four raw components, their normalized
/// forms, and the aggregate c_n (a convex combination of the normalized
/// components unless c_n itself was supplied).
struct CostTable {
  RealVector c_out, c_in, c_pr, c_ind;                  // raw
  RealVector c_out_n, c_in_n, c_pr_n, c_ind_n;          // normalized
  RealVector c_n;                                       // aggregate
  CostProvenance components = CostProvenance::Computed;
  CostProvenance aggregate = CostProvenance::Computed;

  int states() const { return static_cast<int>(c_n.size()); }

  /// Normalizes the components and aggregates them with the given weights
  /// (defaults: 1/4 each).
  static CostTable from_components(const RealVector& c_out,
                                   const RealVector& c_in,
                                   const RealVector& c_pr,
                                   const RealVector& c_ind,
                                   const RealVector& weights = RealVector());

  /// Same, but the supplied aggregate overrides the weighted combination.
  static CostTable with_supplied_aggregate(const RealVector& c_out,
                                           const RealVector& c_in,
                                           const RealVector& c_pr,
                                           const RealVector& c_ind,
                                           const RealVector& c_n);
};

/// Affine min-max normalization onto [0,1]; a constant vector maps to all
/// zeros.
RealVector normalize_cost(const RealVector& c);

/// States partitioned by aggregate cost, groups ascending by cost; two
/// costs fall in one group when they differ by at most eps from the group's
/// representative. Indices inside a group are ascending.
std::vector<std::vector<int>> group_by_cost(const RealVector& c_n, double eps);

struct PlacementOptions {
  double eps = 1e-9;
  bool use_memo = false;  // skip subsets already evaluated (inert with the
                          // group-intersection filter; kept as an option)
};

struct PlacementResult {
  std::vector<PatternMatrix> accepted;            // output patterns, in order
  std::vector<std::vector<int>> accepted_states;  // 0-based sensor sets
  long rejected_count = 0;
  int terminating_group = 0;  // 1-based group index n
  int terminating_k = 0;      // subset size k
  long combinations_evaluated = 0;
  bool fallback = false;  // full-sensor configuration returned
  double wall_time_seconds = 0.0;
};

/// Cost-grouped heuristic search for a minimal observable sensor placement.
/// Groups are scanned in ascending cost order; within group n, subsets of
/// the pooled candidates that intersect group n are enumerated by size and
/// lexicographically; all subsets passing check_observability at the first
/// successful (n, k) are returned. Falls back to the full-sensor
/// configuration when no group yields a success.
PlacementResult place_sensors(const PatternMatrix& a, const CostTable& costs,
                              const PlacementOptions& opts = {});

struct BruteForceResult {
  int min_k = 0;
  std::vector<std::vector<int>> min_sets;  // 0-based, lexicographic
  long combinations_evaluated = 0;
};

/// Certification oracle: enumerates sensor subsets by increasing
/// cardinality and returns the smallest observable size with every
/// observable set of that size. Throws when the state count exceeds
/// `state_limit`.
BruteForceResult brute_force_minimum(const PatternMatrix& a,
                                     int state_limit = 20);

/// Cost CSV: header `state,c_out,c_in,c_pr,c_ind[,c_n]`, states 1-based;
/// when the c_n column is present it overrides aggregation.
CostTable costs_from_csv(const std::string& text);
CostTable load_costs(const std::string& path, int expected_states);

/// Result JSON: accepted sensor sets (1-based), terminating (group, k),
/// counters. Timing is deliberately excluded so outputs are byte-stable.
std::string placement_to_json(const PlacementResult& r);

}  // namespace netobs
