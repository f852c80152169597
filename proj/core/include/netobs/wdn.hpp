#pragma once

#include "netobs/network.hpp"
#include "netobs/pattern.hpp"

#include <vector>

namespace netobs {

/// Operating point of the hydraulic model: pipe flows q and node heads h,
/// all strictly positive.
struct OperatingPoint {
  RealVector flows;  // q_o, size m
  RealVector heads;  // h_o, size n
};

/// Right-hand side of the elastic-water-column dynamics at state x = (q, h):
/// flow block  -L^-1 R diag{|q|} q + L^-1 A_inc^T h,
/// head block  F^-1 (A_inc q - Q - D sqrt(h)),  F = diag{1/2 |A_inc| C_l + C_n}.
/// Requires parameters and h > 0.
RealVector ewc_rhs(const NetworkModel& net, const RealVector& x);

/// Analytic Jacobian of ewc_rhs at a positive operating point.
RealMatrix linearize(const NetworkModel& net, const OperatingPoint& xo);

/// Structural pattern of the linearized model, from topology alone:
/// [[diag{*}, Ainc^T], [Ainc, diag{?}]] with Ainc the Star indicator of the
/// incidence matrix.
PatternMatrix derive_wdn_pattern(const NetworkModel& net);

/// Output pattern of a 0/1 measurement matrix obeying the sensor shape
/// (each row exactly one 1, column sums <= 1): Star where C = 1.
PatternMatrix derive_output_pattern(const RealMatrix& c);

/// Output pattern with one sensor per listed state (0-based, strictly
/// ascending rows in listed order).
PatternMatrix sensors_pattern(const std::vector<int>& states, int n_states);

/// Mass-spring-damper structural pattern from a spring incidence matrix
/// (masses x springs): [[0, diag{*}], [K-pattern, diag{?}]] where the
/// K-pattern is the sparsity of inc * inc^T.
PatternMatrix mass_spring_pattern(const RealMatrix& inc);

/// 2x2 series RLC pattern [[0, *], [*, *]].
PatternMatrix rlc_pattern();

struct SimulationResult {
  std::vector<double> times;
  std::vector<RealVector> states;
};

/// Fixed-step RK4 integration of ewc_rhs.
SimulationResult simulate_rk4(const NetworkModel& net, const RealVector& x0,
                              double dt, int steps);

}  // namespace netobs
