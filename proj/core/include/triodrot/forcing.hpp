#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "triodrot/markov.hpp"
#include "triodrot/sharkovsky.hpp"

namespace triodrot {

// A periodic orbit recovered from an interval-graph loop, together with its
// pattern. The orbit's least period divides the loop length.
struct ForcedCycle {
  TriodPattern pattern;            // canonical
  Loop witness;                    // the interval loop it was extracted from
  std::vector<TriodPoint> orbit;   // exact coordinates, orbit order
  RotationPair rp;                 // of the extracted orbit
};

// Outcome of following one interval loop:
//   Cycle   - the composed affine map has a unique fixed point off the center.
//   Shadow  - the composition is the identity on a subinterval bounded by
//             pattern points; the loop shadows the pattern's own orbit. The
//             interior of the fixed interval may carry a second, shorter
//             orbit (`interior`).
//   Trivial - the only point following the itinerary is the center.
struct ExtractOutcome {
  enum class Kind { Cycle, Shadow, Trivial };
  Kind kind;
  std::optional<ForcedCycle> cycle;
  std::optional<ForcedCycle> interior;  // Shadow only
};

ExtractOutcome extract_cycle(const PLinearMap& m, const Loop& loop);

// The length-q interval loop shadowed by the pattern's own orbit: each
// vertex is a basic interval adjacent to the corresponding orbit point.
// Extracting it reproduces the pattern exactly.
Loop fundamental_loop(const PLinearMap& m, const MarkovGraph& ig);

struct ForcedSet {
  // Deduplicated canonical patterns, sorted by (period, p, placements).
  std::vector<std::pair<TriodPattern, RotationPair>> patterns;
  bool complete = true;  // false when the loop budget truncated the search
};

// Patterns of all orbits extracted from interval-graph loops of length up to
// max_period. A semi-decision: completeness holds only up to the bound and
// the budget, and truncation is always flagged.
ForcedSet forced_patterns(const PLinearMap& m, int max_period, const LoopBudget& budget = {});

// Which of the primitive periods 1, 2, 3 are visible among short interval
// loops: 1 - a self-covering interval with a fixed point off the center;
// 2 - a 2-loop across two distinct branches; 3 - a 3-loop across all three.
std::set<int> primitive_forced_periods(const PLinearMap& m);

// Sufficient condition only: true means copious, false means not shown.
bool is_copious_prefilter(const PLinearMap& m);

// True iff every point is black, i.e. the three branch sets map cyclically
// onto each other as whole sets.
bool block_structure_over_ring(const TriodPattern& p);

// Endpoints of the rotation set: exact min/max cycle mean of the interval
// graph.
std::pair<Rational, Rational> rotation_interval(const PLinearMap& m);

// Bounded-search refinement of an endpoint: the sharpest multiplier (in the
// Sharkovsky order) among extracted orbits attaining that rotation number.
// Only a lower bound in the order; the exact degree is not computed.
struct EndpointDegree {
  Rational rho;
  std::optional<SharkovskyDegree> sharpest_mult;
};

struct RotationIntervalReport {
  Rational lo, hi;
  EndpointDegree at_lo, at_hi;
  bool complete = true;
};

RotationIntervalReport rotation_interval_report(const PLinearMap& m, int max_period,
                                                const LoopBudget& budget = {});

}  // namespace triodrot
