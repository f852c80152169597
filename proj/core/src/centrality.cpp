#include "netobs/centrality.hpp"

#include <stdexcept>

namespace netobs {

RealVector pagerank(const RealMatrix& adj, const PageRankConfig& cfg) {
  if (adj.rows() != adj.cols())
    throw std::invalid_argument("pagerank: adjacency must be square");
  if (cfg.alpha < 0.0 || cfg.alpha > 1.0)
    throw std::invalid_argument("pagerank: alpha must lie in [0,1]");
  if (!(cfg.residual_tol > 0.0))
    throw std::invalid_argument("pagerank: residual_tol must be positive");
  const int n = static_cast<int>(adj.rows());
  if (n == 0) return RealVector();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj(i, j) != 0.0 && adj(i, j) != 1.0)
        throw std::invalid_argument("pagerank: adjacency entries must be 0/1");

  // Column-stochastic transition; column j lists the out-edges of node j.
  RealVector out_degree = adj.colwise().sum();
  RealMatrix p = adj;
  std::vector<int> dangling;
  for (int j = 0; j < n; ++j) {
    if (out_degree(j) > 0.0)
      p.col(j) /= out_degree(j);
    else
      dangling.push_back(j);
  }

  RealVector pr = RealVector::Constant(n, 1.0 / n);
  const double teleport = (1.0 - cfg.alpha) / n;
  for (int it = 0; it < cfg.max_iters; ++it) {
    double dangling_mass = 0.0;
    for (int j : dangling) dangling_mass += pr(j);
    RealVector next =
        cfg.alpha * (p * pr + RealVector::Constant(n, dangling_mass / n));
    next.array() += teleport;
    const double residual = (next - pr).cwiseAbs().maxCoeff();
    pr = next;
    if (residual < cfg.residual_tol) {
      pr /= pr.sum();
      return pr;
    }
  }
  throw std::runtime_error("pagerank: no convergence within max_iters");
}

RealVector pagerank_cost(const RealVector& pr) {
  RealVector c(pr.size());
  for (int i = 0; i < pr.size(); ++i) {
    if (!(pr(i) > 0.0))
      throw std::invalid_argument("pagerank_cost: nonpositive entry");
    c(i) = 1.0 / pr(i);
  }
  return c;
}

RealMatrix pattern_adjacency(const PatternMatrix& a, bool undirected) {
  if (!a.square())
    throw std::invalid_argument("pattern_adjacency: pattern must be square");
  const int n = a.rows();
  RealMatrix adj = RealMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j) == Symbol::Star) {
        // edge j -> i in G(A^T) is A^T(i,j) = A(j,i) = *
        adj(j, i) = 1.0;
        if (undirected) adj(i, j) = 1.0;
      }
  return adj;
}

}  // namespace netobs
