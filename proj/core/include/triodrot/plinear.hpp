#pragma once

#include <vector>

#include "triodrot/pattern.hpp"

namespace triodrot {

// Closure of a component of [P] minus the pattern points and the center;
// endpoints are consecutive elements of P union {0} on one branch.
struct BasicInterval {
  BranchId branch;
  Rational lo;
  Rational hi;  // lo < hi
  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

// The connect-the-dots realization of a pattern: points sit at unit spacing
// (dist = rank), the center is fixed, and each basic interval maps affinely
// onto the arc between its endpoint images. Any other spacing gives a
// conjugate map, so every verdict computed from this one is spacing-free.
class PLinearMap {
 public:
  static PLinearMap build(const TriodPattern& p);

  const TriodPattern& pattern() const { return pattern_; }
  int period() const { return pattern_.period(); }

  TriodPoint coords(const Placement& pl) const;
  TriodPoint point_image(const Placement& pl) const { return coords(pattern_.successor(pl)); }
  int hull(BranchId b) const { return pattern_.branch_count(b); }

  // Sorted by (branch, lo); one interval per pattern point (the point is the
  // interval's outer endpoint).
  const std::vector<BasicInterval>& intervals() const { return intervals_; }
  int interval_index(BranchId b, const Rational& lo) const;

  // Image of an interval endpoint (the center maps to itself).
  TriodPoint endpoint_image(const BasicInterval& iv, bool upper) const;

  // Exact image of any point of [P]. Throws OutsideHull beyond the hull.
  TriodPoint evaluate(const TriodPoint& x) const;

  // All solutions of evaluate(x) = center, the center itself included. One
  // interior solution per basic interval whose endpoint images straddle the
  // center.
  std::vector<TriodPoint> preimages_of_zero() const;

  // Minimal count of connected monotone pieces: per branch 1 + interior
  // folds, minus 2 when the three germs at the center map injectively onto
  // three distinct branch germs.
  int modality() const;

 private:
  explicit PLinearMap(TriodPattern p) : pattern_(std::move(p)) {}
  TriodPattern pattern_;
  std::vector<BasicInterval> intervals_;
};

// Direction of the germ at `from` (not the center) pointing toward `to`:
// Up = away from the center along from's branch, Down = toward the center.
enum class Dir { Up, Down };
Dir initial_direction(const TriodPoint& from, const TriodPoint& to);

}  // namespace triodrot
