#pragma once

#include "netobs/pattern.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netobs {

struct ForcingEvent {
  int forcer = -1;  // node applying the rule (state or sensor column)
  int forced = -1;  // state node turned black
  int round = 0;    // 1-based; one forcing per round
};

/// Colors over {white, black} plus the ordered forcing trace that certifies
/// the final black set.
struct ColoringState {
  std::vector<bool> black;
  std::vector<ForcingEvent> trace;
};

struct ColorResult {
  bool colorable = false;
  ColoringState state;
};

/// Abar construction: off-diagonal entries copied, diagonal becomes Star
/// where A(i,i) = 0 and Unknown otherwise. Throws on non-square input.
PatternMatrix build_abar(const PatternMatrix& a);

/// Combined matrix M = [A^T | C^T], sized n_x x (n_x + n_y). C may have
/// zero rows. Throws when C's column count differs from A's dimension.
PatternMatrix combine_m(const PatternMatrix& a, const PatternMatrix& c);

/// Zero forcing on the combined matrix M (n_x rows, n_x+n_y columns).
/// Non-state columns start black; repeatedly, the lowest-index black node
/// with exactly one white Star-out-neighbor forces it (Unknown entries are
/// ignored). Colorable iff every state node ends black.
ColorResult color(const PatternMatrix& m);

/// Same fixpoint but applying an arbitrary eligible forcing at each step,
/// chosen by a seeded RNG. The final black set is order-independent; only
/// the trace differs.
ColorResult color_randomized(const PatternMatrix& m, std::uint64_t seed);

struct ObservabilityVerdict {
  bool colorable_m = false;
  bool colorable_mbar = false;
  bool observable = false;
  ColoringState trace_m;
  ColoringState trace_mbar;
};

/// Strong structural observability test: colors both [A^T C^T] and
/// [Abar^T C^T]; observable iff both are colorable.
ObservabilityVerdict check_observability(const PatternMatrix& a,
                                         const PatternMatrix& c);

/// Forcing events as JSON lines: {"round":r,"forcer":j,"forced":i}, indices
/// 1-based.
std::string trace_to_jsonl(const ColoringState& s);

}  // namespace netobs
