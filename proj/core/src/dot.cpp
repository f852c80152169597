#include "netobs/dot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace netobs {

namespace {

std::string node_name(int idx, int nx) {
  return idx < nx ? "x" + std::to_string(idx + 1)
                  : "y" + std::to_string(idx - nx + 1);
}

// Grayscale fill for a cost in [0,1]; cheap locations stay light.
std::string cost_fill(double c) {
  const double clamped = std::clamp(c, 0.0, 1.0);
  const int level = static_cast<int>(245.0 - clamped * 160.0);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, level);
  return buf;
}

}  // namespace

std::string to_dot(const PatternMatrix& m, const DotOptions& opts) {
  const int nx = m.rows();
  const int nodes = m.cols();
  if (nodes < nx) throw std::invalid_argument("to_dot: cols must be >= rows");
  if (opts.costs && static_cast<int>(opts.costs->size()) != nx)
    throw std::invalid_argument("to_dot: cost vector length mismatch");

  std::vector<bool> black;
  if (opts.show_coloring) black = color(m).state.black;

  std::ostringstream os;
  os << "digraph M {\n  rankdir=LR;\n";
  for (int v = 0; v < nodes; ++v) {
    os << "  " << node_name(v, nx) << " [";
    os << (v < nx ? "shape=circle" : "shape=star");
    if (opts.show_coloring && black[v]) {
      os << ", style=filled, fillcolor=\"gray25\", fontcolor=white";
    } else if (opts.costs && v < nx) {
      os << ", style=filled, fillcolor=\"" << cost_fill((*opts.costs)(v))
         << "\"";
    }
    os << "];\n";
  }
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < nodes; ++j) {
      if (m(i, j) == Symbol::Star)
        os << "  " << node_name(j, nx) << " -> " << node_name(i, nx) << ";\n";
      else if (m(i, j) == Symbol::Unknown)
        os << "  " << node_name(j, nx) << " -> " << node_name(i, nx)
           << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace netobs
