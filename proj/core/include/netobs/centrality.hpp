#pragma once

#include "netobs/pattern.hpp"

namespace netobs {

struct PageRankConfig {
  double alpha = 0.85;
  int max_iters = 10000;
  double residual_tol = 1e-12;
};

/// PageRank by power iteration on the column-stochastic transition built
/// from a 0/1 adjacency with adj(i,j) = 1 meaning an edge j -> i. Dangling
/// columns redistribute uniformly. The result is a probability vector with
/// every entry >= (1-alpha)/n. Throws when the residual does not reach
/// residual_tol within max_iters.
RealVector pagerank(const RealMatrix& adj, const PageRankConfig& cfg = {});

/// Elementwise reciprocal of a positive PageRank vector (raw sensor-location
/// cost, before normalization). Throws on a nonpositive entry.
RealVector pagerank_cost(const RealVector& pr);

/// Adjacency for pagerank() from a square pattern: the 0/1 indicator of the
/// Star entries of A^T, i.e. the graph G(A^T) that the coloring rule also
/// uses. With `undirected` the Star connectivity is symmetrized.
RealMatrix pattern_adjacency(const PatternMatrix& a, bool undirected = false);

}  // namespace netobs
