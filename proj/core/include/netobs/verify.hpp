#pragma once

#include "netobs/colorability.hpp"
#include "netobs/pattern.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace netobs {

/// Seeded sampler of realizations from a pattern class. Star entries draw a
/// magnitude in [star_min, star_max] with random sign; Unknown entries are
/// exactly zero with probability unknown_zero_prob and otherwise draw like
/// a Star. Draws are row-major, so a seed fixes the realization stream.
class RealizationSampler {
 public:
  explicit RealizationSampler(std::uint64_t seed, double star_min = 0.1,
                              double star_max = 10.0,
                              double unknown_zero_prob = 0.3);

  RealMatrix sample(const PatternMatrix& p);
  void reseed(std::uint64_t seed);
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  double star_min_, star_max_, unknown_zero_prob_;
  std::mt19937_64 rng_;
};

RealMatrix sample_realization(const PatternMatrix& p, RealizationSampler& s);

/// Kalman rank test: true iff [C; CA; ...; CA^{n-1}] has numerical rank n.
/// Blocks are Frobenius-normalized before the SVD (rank-preserving) so the
/// singular-value threshold tol * sigma_max stays meaningful for badly
/// scaled realizations.
bool kalman_rank_observable(const RealMatrix& a, const RealMatrix& c,
                            double tol = 1e-8);

struct CrossValidationReport {
  ObservabilityVerdict structural;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  std::vector<std::uint64_t> seeds_of_failures;
  /// False only when the structural verdict is positive yet some realization
  /// failed the rank test (which would disprove the structural claim).
  bool sound = true;
};

/// Samples `trials` realization pairs of (A, C), trial t seeded with
/// base_seed + t, and rank-tests each. With a positive structural verdict
/// every trial must pass; with a negative one the report merely counts the
/// failing realizations found (sampling cannot certify necessity).
CrossValidationReport cross_validate(const PatternMatrix& a,
                                     const PatternMatrix& c, int trials,
                                     std::uint64_t base_seed,
                                     double rank_tol = 1e-8);

/// {"structural":…,"trials":…,"passes":…,"failures":…,"seeds_of_failures":[…]}
std::string report_to_json(const CrossValidationReport& r);

}  // namespace netobs
