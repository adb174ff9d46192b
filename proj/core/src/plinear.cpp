#include "triodrot/plinear.hpp"

#include <algorithm>

namespace triodrot {

PLinearMap PLinearMap::build(const TriodPattern& p) {
  PLinearMap m(p);
  for (int b = 0; b < 3; ++b) {
    BranchId branch(b);
    for (int r = 1; r <= p.branch_count(branch); ++r)
      m.intervals_.push_back(BasicInterval{branch, Rational(r - 1), Rational(r)});
  }
  return m;
}

TriodPoint PLinearMap::coords(const Placement& pl) const {
  return TriodPoint::at(pl.branch, Rational(pl.rank));
}

int PLinearMap::interval_index(BranchId b, const Rational& lo) const {
  for (int i = 0; i < static_cast<int>(intervals_.size()); ++i)
    if (intervals_[i].branch == b && intervals_[i].lo == lo) return i;
  throw Error("interval_index: no such basic interval");
}

TriodPoint PLinearMap::endpoint_image(const BasicInterval& iv, bool upper) const {
  const Rational& d = upper ? iv.hi : iv.lo;
  if (d == 0) return TriodPoint::center();
  // Unit spacing: endpoint dists are exactly the ranks.
  int rank = static_cast<int>(floor_int(d));
  TRIODROT_CHECK(Rational(rank) == d, "interval endpoint must be a pattern point or 0");
  return point_image(Placement{iv.branch, rank});
}

TriodPoint PLinearMap::evaluate(const TriodPoint& x) const {
  if (x.is_center()) return TriodPoint::center();
  BranchId b = x.branch();
  if (x.dist() > hull(b)) throw OutsideHull("point lies beyond the convex hull of the pattern");
  // Endpoint of a basic interval: return the recorded image (adjacent
  // intervals agree there by continuity).
  if (is_integer(x.dist())) {
    int rank = static_cast<int>(floor_int(x.dist()));
    return point_image(Placement{b, rank});
  }
  BigInt lo_i = floor_int(x.dist());
  BasicInterval iv{b, Rational(lo_i), Rational(lo_i + 1)};
  TriodPoint a = endpoint_image(iv, false);
  TriodPoint c = endpoint_image(iv, true);
  Rational len = iv.hi - iv.lo;
  Rational arc = path_length(a, c);
  TRIODROT_CHECK(arc > 0, "distinct endpoints have distinct images");
  // Arclength position along the arc from a to c.
  Rational s = (x.dist() - iv.lo) / len * arc;
  if (!a.is_center() && !c.is_center() && a.branch() == c.branch()) {
    Rational d = a.dist() < c.dist() ? a.dist() + s : a.dist() - s;
    if (d == 0) return TriodPoint::center();
    return TriodPoint::at(a.branch(), d);
  }
  // The arc passes through the center at arclength dist(a).
  if (s < a.dist()) return TriodPoint::at(a.branch(), a.dist() - s);
  if (s == a.dist()) return TriodPoint::center();
  return TriodPoint::at(c.branch(), s - a.dist());
}

std::vector<TriodPoint> PLinearMap::preimages_of_zero() const {
  std::vector<TriodPoint> out{TriodPoint::center()};
  for (const auto& iv : intervals_) {
    TriodPoint a = endpoint_image(iv, false);
    TriodPoint c = endpoint_image(iv, true);
    if (a.is_center() || c.is_center() || a.branch() == c.branch()) continue;
    // Image arc crosses the center once, at arclength dist(a) from a.
    Rational arc = path_length(a, c);
    Rational t = iv.lo + (iv.hi - iv.lo) * a.dist() / arc;
    out.push_back(TriodPoint::at(iv.branch, t));
  }
  return out;
}

Dir initial_direction(const TriodPoint& from, const TriodPoint& to) {
  TRIODROT_CHECK(!from.is_center(), "germ direction needs a branch point");
  TRIODROT_CHECK(!(from == to), "germ direction needs distinct points");
  if (!to.is_center() && to.branch() == from.branch())
    return to.dist() > from.dist() ? Dir::Up : Dir::Down;
  return Dir::Down;
}

int PLinearMap::modality() const {
  int pieces = 0;
  for (int b = 0; b < 3; ++b) {
    BranchId branch(b);
    int k = pattern_.branch_count(branch);
    if (k == 0) continue;
    int folds = 0;
    // Interior pattern points are those with a basic interval on both sides.
    for (int r = 1; r < k; ++r) {
      TriodPoint v = point_image(Placement{branch, r});
      TriodPoint below = endpoint_image(BasicInterval{branch, Rational(r - 1), Rational(r)}, false);
      TriodPoint above = endpoint_image(BasicInterval{branch, Rational(r), Rational(r + 1)}, true);
      // Fold when both adjacent image arcs leave v in the same direction.
      if (initial_direction(v, below) == initial_direction(v, above)) ++folds;
    }
    pieces += 1 + folds;
  }
  if (pattern_.degrees_of_freedom() == 3) {
    std::array<bool, 3> hit{false, false, false};
    bool injective = true;
    for (int b = 0; b < 3; ++b) {
      BranchId g = pattern_.successor(Placement{BranchId(b), 1}).branch;
      if (hit[g.value()]) injective = false;
      hit[g.value()] = true;
    }
    // The three laps touching the center fuse into one.
    if (injective) pieces -= 2;
  }
  return pieces;
}

}  // namespace triodrot
