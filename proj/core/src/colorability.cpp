#include "netobs/colorability.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace netobs {

PatternMatrix build_abar(const PatternMatrix& a) {
  if (!a.square())
    throw std::invalid_argument("build_abar: pattern must be square");
  PatternMatrix b = a;
  for (int i = 0; i < a.rows(); ++i)
    b.set(i, i, a(i, i) == Symbol::Zero ? Symbol::Star : Symbol::Unknown);
  return b;
}

PatternMatrix combine_m(const PatternMatrix& a, const PatternMatrix& c) {
  if (!a.square())
    throw std::invalid_argument("combine_m: A must be square");
  const int nx = a.rows();
  const int ny = c.rows();
  if (ny > 0 && c.cols() != nx)
    throw std::invalid_argument("combine_m: C column count must equal dim(A)");
  PatternMatrix m(nx, nx + ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < nx; ++j) m.set(i, j, a(j, i));
    for (int s = 0; s < ny; ++s) m.set(i, nx + s, c(s, i));
  }
  return m;
}

namespace {

// Star out-neighbor lists of G(M): node j points to every state i with
// M(i,j) = *.
std::vector<std::vector<int>> star_out_lists(const PatternMatrix& m) {
  std::vector<std::vector<int>> out(m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) == Symbol::Star) out[j].push_back(i);
  return out;
}

// One forcing: black node with exactly one white star-out-neighbor.
// Returns all eligible (forcer, target) pairs, forcer ascending.
std::vector<std::pair<int, int>> eligible_forcings(
    const std::vector<std::vector<int>>& out, const std::vector<bool>& black) {
  std::vector<std::pair<int, int>> result;
  for (int j = 0; j < static_cast<int>(out.size()); ++j) {
    if (!black[j]) continue;
    int white_target = -1;
    int whites = 0;
    for (int i : out[j]) {
      if (!black[i]) {
        ++whites;
        white_target = i;
        if (whites > 1) break;
      }
    }
    if (whites == 1) result.emplace_back(j, white_target);
  }
  return result;
}

template <typename Chooser>
ColorResult run_color(const PatternMatrix& m, Chooser choose) {
  if (m.cols() < m.rows())
    throw std::invalid_argument("color: combined matrix needs cols >= rows");
  const int nx = m.rows();
  const int nodes = m.cols();
  const auto out = star_out_lists(m);

  ColoringState st;
  st.black.assign(nodes, false);
  for (int j = nx; j < nodes; ++j) st.black[j] = true;

  int round = 0;
  while (true) {
    auto eligible = eligible_forcings(out, st.black);
    if (eligible.empty()) break;
    auto [forcer, forced] = choose(eligible);
    st.black[forced] = true;
    st.trace.push_back({forcer, forced, ++round});
  }

  bool colorable = true;
  for (int i = 0; i < nx; ++i) colorable = colorable && st.black[i];
  return {colorable, std::move(st)};
}

}  // namespace

ColorResult color(const PatternMatrix& m) {
  return run_color(m, [](const auto& eligible) { return eligible.front(); });
}

ColorResult color_randomized(const PatternMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run_color(m, [&rng](const auto& eligible) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return eligible[pick(rng)];
  });
}

ObservabilityVerdict check_observability(const PatternMatrix& a,
                                         const PatternMatrix& c) {
  ObservabilityVerdict v;
  auto rm = color(combine_m(a, c));
  auto rb = color(combine_m(build_abar(a), c));
  v.colorable_m = rm.colorable;
  v.colorable_mbar = rb.colorable;
  v.observable = rm.colorable && rb.colorable;
  v.trace_m = std::move(rm.state);
  v.trace_mbar = std::move(rb.state);
  return v;
}

std::string trace_to_jsonl(const ColoringState& s) {
  std::ostringstream os;
  for (const auto& e : s.trace) {
    os << "{\"round\":" << e.round << ",\"forcer\":" << e.forcer + 1
       << ",\"forced\":" << e.forced + 1 << "}\n";
  }
  return os.str();
}

}  // namespace netobs
