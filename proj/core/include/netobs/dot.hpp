#pragma once

#include "netobs/colorability.hpp"
#include "netobs/pattern.hpp"

#include <optional>
#include <string>

namespace netobs {

struct DotOptions {
  /// When set, run the coloring fixpoint and fill final black nodes.
  bool show_coloring = false;
  /// Optional per-state cost in [0,1]; encoded as a grayscale fill on state
  /// nodes (light = cheap).
  std::optional<RealVector> costs;
};

/// DOT digraph of a combined pattern matrix (n_x rows, n_x+n_y columns).
/// States are circles x1..xn, extra columns star-shaped sensors y1..yk;
/// Star edges solid, Unknown edges dashed.
std::string to_dot(const PatternMatrix& m, const DotOptions& opts = {});

}  // namespace netobs
