#include "triodrot/forcing.hpp"

#include <algorithm>
#include <map>

namespace triodrot {

namespace {

// Affine map t -> alpha*t + beta between dist coordinates.
struct Affine {
  Rational alpha;
  Rational beta;
  Rational operator()(const Rational& t) const { return alpha * t + beta; }
  Affine after(const Affine& first) const {
    return Affine{alpha * first.alpha, alpha * first.beta + beta};
  }
};

struct ClosedInterval {
  Rational lo, hi;  // lo <= hi
};

// Restriction of f on basic interval `iv` to the sub-segment that maps onto
// the target [c, d] on branch `target` (the target must lie inside the image
// arc, which edge presence guarantees). Returns the domain sub-interval and
// the affine dist map onto the target.
struct PullbackStep {
  ClosedInterval domain;
  Affine map;
};

PullbackStep pull_back(const PLinearMap& m, const BasicInterval& iv, BranchId target,
                       const Rational& c, const Rational& d) {
  TriodPoint a = m.endpoint_image(iv, false);
  TriodPoint b = m.endpoint_image(iv, true);
  Rational len = iv.hi - iv.lo;
  Rational arc = path_length(a, b);
  TRIODROT_CHECK(arc > 0, "image arc is nondegenerate");
  // Position along the arc as a function of t in [lo, hi]:
  //   s(t) = (t - lo) * arc / len.
  // The portion of the arc on `target`, as dist x vs arclength s:
  //   same-branch arc:         x = a + sgn(b-a) * s
  //   through the center, on branch(a): x = a - s     for s in [0, a]
  //   through the center, on branch(b): x = s - a     for s in [a, arc]
  Rational s1, s2;  // arclengths of the target endpoints, in arc order
  bool increasing;  // does x increase with s on the target portion?
  if (!a.is_center() && !b.is_center() && a.branch() == b.branch()) {
    TRIODROT_CHECK(a.branch() == target, "covered interval must lie on the image branch");
    if (b.dist() > a.dist()) {
      s1 = c - a.dist();
      s2 = d - a.dist();
      increasing = true;
    } else {
      s1 = a.dist() - d;
      s2 = a.dist() - c;
      increasing = false;
    }
  } else if (!a.is_center() && a.branch() == target) {
    s1 = a.dist() - d;
    s2 = a.dist() - c;
    increasing = false;
  } else {
    TRIODROT_CHECK(!b.is_center() && b.branch() == target,
                   "covered interval must lie on the image arc");
    s1 = a.dist() + c;
    s2 = a.dist() + d;
    increasing = true;
  }
  TRIODROT_CHECK(s1 >= 0 && s2 <= arc && s1 < s2, "target must sit inside the image arc");
  // t(s) = lo + s * len / arc, x(t) as above; compose into x = alpha*t + beta.
  Rational slope = arc / len;                     // ds/dt
  Rational t1 = iv.lo + s1 * len / arc;
  Rational t2 = iv.lo + s2 * len / arc;
  Affine map;
  if (increasing) {
    map.alpha = slope;
    map.beta = c - slope * t1;
  } else {
    map.alpha = -slope;
    map.beta = d + slope * t1;
  }
  TRIODROT_CHECK(map(t1) == (increasing ? c : d), "pullback endpoint check");
  TRIODROT_CHECK(map(t2) == (increasing ? d : c), "pullback endpoint check");
  return PullbackStep{ClosedInterval{t1, t2}, map};
}

// Orbit of a point under the map, stopped at first return. Returns the least
// period r (asserting r divides max_steps) and the visited points.
std::vector<TriodPoint> iterate_orbit(const PLinearMap& m, const TriodPoint& start,
                                      int max_steps) {
  std::vector<TriodPoint> pts{start};
  TriodPoint cur = start;
  for (int i = 1; i <= max_steps; ++i) {
    cur = m.evaluate(cur);
    if (cur == start) {
      TRIODROT_CHECK(max_steps % i == 0, "least period must divide the loop length");
      return pts;
    }
    pts.push_back(cur);
  }
  throw Error("internal: itinerary point failed to close up");
}

TriodPattern pattern_of_orbit(const std::vector<TriodPoint>& orbit) {
  // Rank = position of the point's dist among the orbit's dists on its branch.
  std::array<std::vector<Rational>, 3> dists;
  for (const auto& pt : orbit) {
    TRIODROT_CHECK(!pt.is_center(), "orbit through the center has no pattern");
    dists[pt.branch().value()].push_back(pt.dist());
  }
  for (auto& v : dists) std::sort(v.begin(), v.end());
  std::vector<Placement> steps;
  steps.reserve(orbit.size());
  for (const auto& pt : orbit) {
    const auto& v = dists[pt.branch().value()];
    int rank = static_cast<int>(std::lower_bound(v.begin(), v.end(), pt.dist()) - v.begin()) + 1;
    steps.push_back(Placement{pt.branch(), rank});
  }
  return TriodPattern(std::move(steps)).canonical_form();
}

ForcedCycle make_cycle(const PLinearMap& m, const Loop& loop, const TriodPoint& start) {
  std::vector<TriodPoint> orbit = iterate_orbit(m, start, loop.length());
  int r = static_cast<int>(orbit.size());
  int thirds = 0;
  for (int i = 0; i < r; ++i)
    thirds += displacement_thirds(orbit[i].branch(), orbit[(i + 1) % r].branch());
  TRIODROT_CHECK(thirds % 3 == 0, "orbit displacement must be whole");
  return ForcedCycle{pattern_of_orbit(orbit), loop, std::move(orbit), RotationPair{thirds / 3, r}};
}

}  // namespace

ExtractOutcome extract_cycle(const PLinearMap& m, const Loop& loop) {
  const auto& ivs = m.intervals();
  int len = loop.length();
  TRIODROT_CHECK(len >= 1, "loop must be nonempty");

  // Backward refinement: K_j = points of I_j whose next `len - j` steps
  // follow the itinerary and land back in I_0. Covering edges keep every K_j
  // nonempty; the composed dist map is assembled on the way back.
  const BasicInterval& first = ivs[loop.vertices[0]];
  ClosedInterval target{first.lo, first.hi};
  std::vector<PullbackStep> stepv(len);
  for (int j = len - 1; j >= 0; --j) {
    const BasicInterval& iv = ivs[loop.vertices[j]];
    BranchId tb = ivs[loop.vertices[(j + 1) % len]].branch;
    if (j == len - 1) tb = first.branch;
    stepv[j] = pull_back(m, iv, tb, target.lo, target.hi);
    TRIODROT_CHECK(stepv[j].domain.lo >= iv.lo && stepv[j].domain.hi <= iv.hi,
                   "refined domain stays inside its interval");
    target = stepv[j].domain;
  }
  ClosedInterval k0 = target;
  Affine f{Rational(1), Rational(0)};
  for (int j = 0; j < len; ++j) f = stepv[j].map.after(f);

  if (f.alpha == 1) {
    TRIODROT_CHECK(f.beta == 0, "unit-slope composition onto a superset must be the identity");
    // Identity on k0: the endpoints are pattern points (or the center), and
    // the loop shadows the pattern's own orbit through them. Points strictly
    // inside shadow a parallel orbit that may close up sooner.
    TRIODROT_CHECK(is_integer(k0.lo) && is_integer(k0.hi),
                   "fixed interval is bounded by pattern points or the center");
    Rational endpoint = k0.hi;
    TRIODROT_CHECK(endpoint > 0, "fixed interval ends at a pattern point");
    ExtractOutcome out{ExtractOutcome::Kind::Shadow, std::nullopt, std::nullopt};
    out.cycle = make_cycle(m, loop, TriodPoint::at(first.branch, endpoint));
    Rational mid = (k0.lo + k0.hi) / 2;
    out.interior = make_cycle(m, loop, TriodPoint::at(first.branch, mid));
    return out;
  }

  Rational fixed = f.beta / (1 - f.alpha);
  TRIODROT_CHECK(fixed >= k0.lo && fixed <= k0.hi, "fixed point lies in the refined domain");
  if (fixed == 0) return ExtractOutcome{ExtractOutcome::Kind::Trivial, std::nullopt, std::nullopt};
  ExtractOutcome out{ExtractOutcome::Kind::Cycle, std::nullopt, std::nullopt};
  out.cycle = make_cycle(m, loop, TriodPoint::at(first.branch, fixed));
  // Itinerary containment check for the full loop length.
  TriodPoint cur = TriodPoint::at(first.branch, fixed);
  for (int j = 0; j < len; ++j) {
    const BasicInterval& iv = ivs[loop.vertices[j]];
    TRIODROT_CHECK(!cur.is_center() && cur.branch() == iv.branch && cur.dist() >= iv.lo &&
                       cur.dist() <= iv.hi,
                   "orbit point lies in its itinerary interval");
    cur = m.evaluate(cur);
  }
  return out;
}

Loop fundamental_loop(const PLinearMap& m, const MarkovGraph& ig) {
  const TriodPattern& p = m.pattern();
  int q = p.period();
  // Start at an outermost orbit point; the incoming direction there can only
  // be Down, so the direction walk closes after exactly q steps.
  int start = -1;
  for (int k = 0; k < q && start < 0; ++k)
    if (p.step(k).rank == p.branch_count(p.step(k).branch)) start = k;
  TRIODROT_CHECK(start >= 0, "every pattern has an outermost point");

  std::vector<int> verts;
  verts.reserve(q);
  Dir dir = Dir::Down;
  for (int i = 0; i < q; ++i) {
    Placement x = p.step(start + i);
    int lo = dir == Dir::Down ? x.rank - 1 : x.rank;
    TRIODROT_CHECK(lo >= 0 && lo < p.branch_count(x.branch), "adjacent interval exists");
    verts.push_back(m.interval_index(x.branch, Rational(lo)));
    // Next direction: where the image arc of this interval leaves the next
    // orbit point.
    TriodPoint from = m.point_image(x);
    int other_rank = dir == Dir::Down ? x.rank - 1 : x.rank + 1;
    TriodPoint to = other_rank == 0 ? TriodPoint::center()
                                    : m.point_image(Placement{x.branch, other_rank});
    dir = initial_direction(from, to);
  }
  TRIODROT_CHECK(dir == Dir::Down, "direction walk closes at the outermost start");
  for (int i = 0; i < q; ++i)
    TRIODROT_CHECK(ig.has_edge(verts[i], verts[(i + 1) % q]),
                   "fundamental loop follows covering edges");
  return Loop{verts}.canonical_rotation();
}

namespace {

struct PatternKeyLess {
  bool operator()(const TriodPattern& a, const TriodPattern& b) const {
    if (a.period() != b.period()) return a.period() < b.period();
    return a.steps() < b.steps();
  }
};

}  // namespace

ForcedSet forced_patterns(const PLinearMap& m, int max_period, const LoopBudget& budget) {
  MarkovGraph ig = interval_graph(m);
  std::map<TriodPattern, RotationPair, PatternKeyLess> found;
  auto record = [&](const std::optional<ForcedCycle>& fc) {
    if (fc) found.emplace(fc->pattern, fc->rp);
  };
  EnumStatus st = enumerate_loops(
      ig, max_period,
      [&](const Loop& loop) {
        ExtractOutcome out = extract_cycle(m, loop);
        record(out.cycle);
        record(out.interior);
        return true;
      },
      budget);
  ForcedSet fs;
  fs.complete = st == EnumStatus::Complete;
  for (auto& [pat, rp] : found) fs.patterns.emplace_back(pat, rp);
  std::sort(fs.patterns.begin(), fs.patterns.end(), [](const auto& a, const auto& b) {
    if (a.second.q != b.second.q) return a.second.q < b.second.q;
    if (a.second.p != b.second.p) return a.second.p < b.second.p;
    return a.first.steps() < b.first.steps();
  });
  return fs;
}

std::set<int> primitive_forced_periods(const PLinearMap& m) {
  MarkovGraph ig = interval_graph(m);
  std::set<int> out;
  int n = ig.order();
  for (int i = 0; i < n && !out.count(1); ++i) {
    if (!ig.has_edge(i, i)) continue;
    // A self-covering interval forces a fixed point; it counts only when the
    // fixed point is off the center.
    ExtractOutcome e = extract_cycle(m, Loop{{i}});
    if (e.kind != ExtractOutcome::Kind::Trivial) out.insert(1);
  }
  for (int i = 0; i < n && !out.count(2); ++i)
    for (int j : ig.adj[i]) {
      if (ig.vbranch[i] == ig.vbranch[j] || !ig.has_edge(j, i)) continue;
      out.insert(2);
      break;
    }
  for (int i = 0; i < n && !out.count(3); ++i)
    for (int j : ig.adj[i]) {
      if (ig.vbranch[j] == ig.vbranch[i]) continue;
      for (int k : ig.adj[j]) {
        if (ig.vbranch[k] == ig.vbranch[i] || ig.vbranch[k] == ig.vbranch[j]) continue;
        if (ig.has_edge(k, i)) {
          out.insert(3);
          break;
        }
      }
      if (out.count(3)) break;
    }
  return out;
}

bool is_copious_prefilter(const PLinearMap& m) {
  return primitive_forced_periods(m).size() >= 2;
}

bool block_structure_over_ring(const TriodPattern& p) {
  for (int k = 0; k < p.period(); ++k)
    if (p.step_displacement_thirds(k) != 1) return false;
  return true;
}

std::pair<Rational, Rational> rotation_interval(const PLinearMap& m) {
  return cycle_mean_extremes(interval_graph(m));
}

RotationIntervalReport rotation_interval_report(const PLinearMap& m, int max_period,
                                                const LoopBudget& budget) {
  auto [lo, hi] = rotation_interval(m);
  ForcedSet fs = forced_patterns(m, max_period, budget);
  RotationIntervalReport rep{lo, hi, EndpointDegree{lo, std::nullopt},
                             EndpointDegree{hi, std::nullopt}, fs.complete};
  for (const auto& [pat, rp] : fs.patterns) {
    ModifiedRotationPair mrp = pat.modified_rotation_pair();
    for (EndpointDegree* e : {&rep.at_lo, &rep.at_hi}) {
      if (mrp.rho != e->rho) continue;
      SharkovskyDegree d = SharkovskyDegree::of(mrp.mult);
      e->sharpest_mult = e->sharpest_mult ? sharkovsky_sharpest(*e->sharpest_mult, d) : d;
    }
  }
  return rep;
}

}  // namespace triodrot
