#include "netobs/centrality.hpp"

#include "netobs/wdn.hpp"

#include <doctest.h>

#include "test_support.hpp"

#include <algorithm>
#include <numeric>

using namespace netobs;
using testsupport::star_pattern;

namespace {

RealMatrix cycle_adjacency(int n) {
  RealMatrix adj = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) adj((j + 1) % n, j) = 1.0;
  return adj;
}

std::vector<int> ranking(const RealVector& v) {
  std::vector<int> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return v(a) > v(b); });
  return idx;
}

}  // namespace

TEST_CASE("cycle pagerank is uniform") {
  const int n = 6;
  const RealVector pr = pagerank(cycle_adjacency(n));
  CHECK(pr.isApprox(RealVector::Constant(n, 1.0 / n), 1e-9));
  CHECK(pr.sum() == doctest::Approx(1.0));
}

TEST_CASE("alpha zero yields the uniform vector") {
  RealMatrix adj = RealMatrix::Zero(2, 2);
  adj(1, 0) = 1.0;  // edge 1 -> 2
  PageRankConfig cfg;
  cfg.alpha = 0.0;
  CHECK(pagerank(adj, cfg).isApprox(RealVector::Constant(2, 0.5)));
}

TEST_CASE("star hub dominates the ranking") {
  const RealMatrix adj = pattern_adjacency(star_pattern());
  const RealVector pr = pagerank(adj);
  int argmax = 0;
  pr.maxCoeff(&argmax);
  CHECK(argmax == 4);
  CHECK(pr(0) > pr(1));  // the cycle member outranks the plain leaves
  CHECK(pr(1) == doctest::Approx(pr(2)));
  CHECK(pr(1) == doctest::Approx(pr(3)));

  // hub gets the minimum cost after inversion + normalization, leaves the max
  const RealVector cost = pagerank_cost(pr);
  const double lo = cost.minCoeff(), hi = cost.maxCoeff();
  const RealVector cn = (cost.array() - lo) / (hi - lo);
  CHECK(cn(4) == doctest::Approx(0.0));
  CHECK(cn(1) == doctest::Approx(1.0));
  CHECK(cn(2) == doctest::Approx(1.0));
}

TEST_CASE("tank state carries the maximum normalized pagerank cost") {
  const auto wdn = derive_wdn_pattern(testsupport::triangular_network());
  const RealVector pr = pagerank(pattern_adjacency(wdn));
  const RealVector cost = pagerank_cost(pr);
  const double lo = cost.minCoeff(), hi = cost.maxCoeff();
  const RealVector cn = (cost.array() - lo) / (hi - lo);
  CHECK(cn(7) == doctest::Approx(1.0));
  CHECK(cn(0) == doctest::Approx(0.0));  // pipe 1 is the most central state
}

TEST_CASE("pagerank cost rejects nonpositive input") {
  RealVector bad(2);
  bad << 0.5, 0.0;
  CHECK_THROWS_AS(pagerank_cost(bad), std::invalid_argument);
  RealVector uniform = RealVector::Constant(4, 0.25);
  CHECK(pagerank_cost(uniform).isApprox(RealVector::Constant(4, 4.0)));
}

TEST_CASE("ranking is stable across residual tolerances") {
  const RealMatrix adj = pattern_adjacency(star_pattern());
  PageRankConfig loose, tight;
  loose.residual_tol = 1e-8;
  tight.residual_tol = 1e-12;
  CHECK(ranking(pagerank(adj, loose)) == ranking(pagerank(adj, tight)));

  const auto wdn = pattern_adjacency(derive_wdn_pattern(testsupport::triangular_network()));
  CHECK(ranking(pagerank(wdn, loose)) == ranking(pagerank(wdn, tight)));
}

TEST_CASE("dangling nodes redistribute uniformly") {
  RealMatrix adj = RealMatrix::Zero(2, 2);
  adj(1, 0) = 1.0;  // node 2 has no out-edges
  const RealVector pr = pagerank(adj);
  CHECK(pr.sum() == doctest::Approx(1.0));
  CHECK(pr(1) > pr(0));
  CHECK(pr(0) >= (1.0 - 0.85) / 2.0);

  CHECK(pagerank(RealMatrix::Zero(3, 3))
            .isApprox(RealVector::Constant(3, 1.0 / 3.0)));
}

TEST_CASE("pagerank input validation and convergence guard") {
  CHECK_THROWS_AS(pagerank(RealMatrix::Zero(2, 3)), std::invalid_argument);
  RealMatrix weighted = RealMatrix::Zero(2, 2);
  weighted(0, 1) = 0.5;
  CHECK_THROWS_AS(pagerank(weighted), std::invalid_argument);
  PageRankConfig bad;
  bad.alpha = 1.5;
  CHECK_THROWS_AS(pagerank(cycle_adjacency(3), bad), std::invalid_argument);

  PageRankConfig strict;
  strict.max_iters = 1;
  strict.residual_tol = 1e-15;
  CHECK_THROWS_AS(pagerank(pattern_adjacency(star_pattern()), strict),
                  std::runtime_error);
}

TEST_CASE("undirected pattern adjacency symmetrizes the star connectivity") {
  const RealMatrix adj = pattern_adjacency(star_pattern(), true);
  CHECK(adj.isApprox(adj.transpose()));
  CHECK(adj(0, 4) == 1.0);
  CHECK(adj(4, 0) == 1.0);
}
