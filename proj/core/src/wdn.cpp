#include "netobs/wdn.hpp"

#include <cmath>
#include <stdexcept>

namespace netobs {

namespace {

struct ModelMatrices {
  RealMatrix inc;  // n x m
  RealVector f;    // diag of F, size n
};

ModelMatrices model_matrices(const NetworkModel& net) {
  net.validate();
  if (!net.params)
    throw std::invalid_argument("hydraulic parameters are required");
  auto [adj, inc] = adjacency_and_incidence(net);
  (void)adj;
  // F = diag{1/2 |A_inc| C_l + C_n}
  RealVector f = 0.5 * inc.cwiseAbs() * net.params->link_capacitance +
                 net.params->node_capacitance;
  return {std::move(inc), std::move(f)};
}

}  // namespace

RealVector ewc_rhs(const NetworkModel& net, const RealVector& x) {
  const auto mm = model_matrices(net);
  const auto& p = *net.params;
  const int m = net.edge_count();
  const int n = net.node_count();
  if (static_cast<int>(x.size()) != m + n)
    throw std::invalid_argument("ewc_rhs: state size must be m + n");
  const RealVector q = x.head(m);
  const RealVector h = x.tail(n);
  for (int i = 0; i < n; ++i)
    if (!(h(i) > 0.0))
      throw std::invalid_argument("ewc_rhs: heads must be strictly positive");

  RealVector dq =
      (-p.resistance.cwiseProduct(q.cwiseAbs().cwiseProduct(q)) +
       mm.inc.transpose() * h)
          .cwiseQuotient(p.inductance);
  RealVector dh = (mm.inc * q - p.demand -
                   p.discharge.cwiseProduct(h.cwiseSqrt()))
                      .cwiseQuotient(mm.f);
  RealVector out(m + n);
  out << dq, dh;
  return out;
}

RealMatrix linearize(const NetworkModel& net, const OperatingPoint& xo) {
  const auto mm = model_matrices(net);
  const auto& p = *net.params;
  const int m = net.edge_count();
  const int n = net.node_count();
  if (static_cast<int>(xo.flows.size()) != m ||
      static_cast<int>(xo.heads.size()) != n)
    throw std::invalid_argument("linearize: operating point size mismatch");
  for (int i = 0; i < m; ++i)
    if (xo.flows(i) == 0.0)
      throw std::invalid_argument("linearize: zero flow at operating point");
  for (int i = 0; i < n; ++i)
    if (!(xo.heads(i) > 0.0))
      throw std::invalid_argument("linearize: nonpositive head");

  RealMatrix a = RealMatrix::Zero(m + n, m + n);
  // top-left: -L^-1 R diag{2 q^2 / |q|}
  for (int i = 0; i < m; ++i) {
    const double q = xo.flows(i);
    a(i, i) = -p.resistance(i) / p.inductance(i) * 2.0 * q * q / std::abs(q);
  }
  // top-right: L^-1 A_inc^T
  a.block(0, m, m, n) =
      p.inductance.cwiseInverse().asDiagonal() * mm.inc.transpose();
  // bottom-left: F^-1 A_inc
  a.block(m, 0, n, m) = mm.f.cwiseInverse().asDiagonal() * mm.inc;
  // bottom-right: -F^-1 D diag{1/(2 sqrt(h))}
  for (int i = 0; i < n; ++i)
    a(m + i, m + i) =
        -p.discharge(i) / mm.f(i) / (2.0 * std::sqrt(xo.heads(i)));
  return a;
}

PatternMatrix derive_wdn_pattern(const NetworkModel& net) {
  net.validate();
  const int n = net.node_count();
  const int m = net.edge_count();
  if (n + m == 0) throw std::invalid_argument("empty network");
  auto [adj, inc] = adjacency_and_incidence(net);
  (void)adj;
  PatternMatrix p(m + n, m + n);
  for (int i = 0; i < m; ++i) p.set(i, i, Symbol::Star);
  for (int i = 0; i < n; ++i) p.set(m + i, m + i, Symbol::Unknown);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (inc(i, j) != 0.0) {
        p.set(m + i, j, Symbol::Star);  // A_inc block
        p.set(j, m + i, Symbol::Star);  // A_inc^T block
      }
    }
  }
  return p;
}

PatternMatrix derive_output_pattern(const RealMatrix& c) {
  const int ny = static_cast<int>(c.rows());
  const int nx = static_cast<int>(c.cols());
  std::vector<int> column_uses(nx, 0);
  for (int i = 0; i < ny; ++i) {
    int ones = 0;
    for (int j = 0; j < nx; ++j) {
      const double v = c(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument(
            "derive_output_pattern: entries must be 0 or 1");
      if (v == 1.0) {
        ++ones;
        ++column_uses[j];
      }
    }
    if (ones != 1)
      throw std::invalid_argument(
          "derive_output_pattern: each row needs exactly one 1");
  }
  for (int j = 0; j < nx; ++j)
    if (column_uses[j] > 1)
      throw std::invalid_argument(
          "derive_output_pattern: duplicated sensor column");
  PatternMatrix p(ny, nx);
  for (int i = 0; i < ny; ++i)
    for (int j = 0; j < nx; ++j)
      if (c(i, j) == 1.0) p.set(i, j, Symbol::Star);
  return p;
}

PatternMatrix sensors_pattern(const std::vector<int>& states, int n_states) {
  PatternMatrix p(static_cast<int>(states.size()), n_states);
  int prev = -1;
  for (std::size_t r = 0; r < states.size(); ++r) {
    const int s = states[r];
    if (s < 0 || s >= n_states)
      throw std::invalid_argument("sensors_pattern: state index out of range");
    if (s <= prev)
      throw std::invalid_argument(
          "sensors_pattern: states must be strictly ascending");
    prev = s;
    p.set(static_cast<int>(r), s, Symbol::Star);
  }
  return p;
}

PatternMatrix mass_spring_pattern(const RealMatrix& inc) {
  const int n = static_cast<int>(inc.rows());
  PatternMatrix p(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) p.set(i, n + i, Symbol::Star);       // velocity coupling
  for (int i = 0; i < n; ++i) p.set(n + i, n + i, Symbol::Unknown);  // damping
  const RealMatrix k = inc * inc.transpose();  // spring coupling sparsity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (k(i, j) != 0.0) p.set(n + i, j, Symbol::Star);
  return p;
}

PatternMatrix rlc_pattern() {
  PatternMatrix p(2, 2);
  p.set(0, 1, Symbol::Star);
  p.set(1, 0, Symbol::Star);
  p.set(1, 1, Symbol::Star);
  return p;
}

SimulationResult simulate_rk4(const NetworkModel& net, const RealVector& x0,
                              double dt, int steps) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_rk4: dt must be > 0");
  if (steps < 0) throw std::invalid_argument("simulate_rk4: negative steps");
  SimulationResult result;
  result.times.reserve(steps + 1);
  result.states.reserve(steps + 1);
  RealVector x = x0;
  result.times.push_back(0.0);
  result.states.push_back(x);
  for (int s = 1; s <= steps; ++s) {
    const RealVector k1 = ewc_rhs(net, x);
    const RealVector k2 = ewc_rhs(net, x + 0.5 * dt * k1);
    const RealVector k3 = ewc_rhs(net, x + 0.5 * dt * k2);
    const RealVector k4 = ewc_rhs(net, x + dt * k3);
    x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    result.times.push_back(s * dt);
    result.states.push_back(x);
  }
  return result;
}

}  // namespace netobs
