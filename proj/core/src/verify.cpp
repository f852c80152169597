#include "netobs/verify.hpp"

#include <Eigen/SVD>

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace netobs {

using nlohmann::json;

RealizationSampler::RealizationSampler(std::uint64_t seed, double star_min,
                                       double star_max,
                                       double unknown_zero_prob)
    : seed_(seed),
      star_min_(star_min),
      star_max_(star_max),
      unknown_zero_prob_(unknown_zero_prob),
      rng_(seed) {
  if (!(star_min > 0.0) || !(star_max > star_min))
    throw std::invalid_argument("sampler: need 0 < star_min < star_max");
  if (unknown_zero_prob < 0.0 || unknown_zero_prob > 1.0)
    throw std::invalid_argument("sampler: unknown_zero_prob out of [0,1]");
}

void RealizationSampler::reseed(std::uint64_t seed) {
  seed_ = seed;
  rng_.seed(seed);
}

RealMatrix RealizationSampler::sample(const PatternMatrix& p) {
  std::uniform_real_distribution<double> magnitude(star_min_, star_max_);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_nonzero = [&] {
    const double mag = magnitude(rng_);
    return unit(rng_) < 0.5 ? -mag : mag;
  };
  RealMatrix m = RealMatrix::Zero(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i) {
    for (int j = 0; j < p.cols(); ++j) {
      switch (p(i, j)) {
        case Symbol::Zero: break;
        case Symbol::Star: m(i, j) = draw_nonzero(); break;
        case Symbol::Unknown:
          if (unit(rng_) >= unknown_zero_prob_) m(i, j) = draw_nonzero();
          break;
      }
    }
  }
  return m;
}

RealMatrix sample_realization(const PatternMatrix& p, RealizationSampler& s) {
  return s.sample(p);
}

bool kalman_rank_observable(const RealMatrix& a, const RealMatrix& c,
                            double tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("kalman_rank_observable: A must be square");
  if (c.cols() != a.rows())
    throw std::invalid_argument("kalman_rank_observable: shape mismatch");
  const int n = static_cast<int>(a.rows());
  const int p = static_cast<int>(c.rows());
  if (n == 0) return true;
  if (p == 0) return false;

  RealMatrix obs(static_cast<long>(n) * p, n);
  RealMatrix block = c;
  for (int k = 0; k < n; ++k) {
    const double norm = block.norm();
    obs.middleRows(static_cast<long>(k) * p, p) =
        norm > 0.0 ? RealMatrix(block / norm) : block;
    if (k + 1 < n) block = block * a;
  }
  Eigen::JacobiSVD<RealMatrix> svd(obs);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return false;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank == n;
}

CrossValidationReport cross_validate(const PatternMatrix& a,
                                     const PatternMatrix& c, int trials,
                                     std::uint64_t base_seed,
                                     double rank_tol) {
  if (trials < 1)
    throw std::invalid_argument("cross_validate: trials must be >= 1");
  CrossValidationReport report;
  report.structural = check_observability(a, c);
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    RealizationSampler sampler(base_seed + static_cast<std::uint64_t>(t));
    const RealMatrix areal = sampler.sample(a);
    const RealMatrix creal = sampler.sample(c);
    if (kalman_rank_observable(areal, creal, rank_tol)) {
      ++report.passes;
    } else {
      ++report.failures;
      report.seeds_of_failures.push_back(base_seed +
                                         static_cast<std::uint64_t>(t));
    }
  }
  report.sound = !(report.structural.observable && report.failures > 0);
  return report;
}

std::string report_to_json(const CrossValidationReport& r) {
  json j;
  j["structural"] = r.structural.observable;
  j["colorable_m"] = r.structural.colorable_m;
  j["colorable_mbar"] = r.structural.colorable_mbar;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["failures"] = r.failures;
  j["seeds_of_failures"] = r.seeds_of_failures;
  j["sound"] = r.sound;
  // Sampling cannot refute observability: a negative structural verdict with
  // zero sampled failures is still a negative verdict.
  j["note"] = r.structural.observable
                  ? "structural verdict is universal over the class"
                  : "sampling does not certify the necessity direction";
  return j.dump(2);
}

}  // namespace netobs
