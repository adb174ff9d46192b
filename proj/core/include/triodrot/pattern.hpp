#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "triodrot/errors.hpp"
#include "triodrot/rational.hpp"

namespace triodrot {

// One of the three branches of the triod. Arithmetic is modulo 3.
class BranchId {
 public:
  constexpr explicit BranchId(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}
  constexpr int value() const { return v_; }
  constexpr BranchId next(int j = 1) const { return BranchId(v_ + j); }
  friend constexpr auto operator<=>(BranchId a, BranchId b) = default;

 private:
  std::uint8_t v_;
};

inline constexpr BranchId kBranch0{0};
inline constexpr BranchId kBranch1{1};
inline constexpr BranchId kBranch2{2};

// A point of the triod: the branching point (center) or a point at positive
// distance from it on one branch. dist == 0 exactly when the point is the
// center.
class TriodPoint {
 public:
  static TriodPoint center() { return TriodPoint(); }
  static TriodPoint at(BranchId b, Rational dist) {
    if (dist <= 0) throw Error("TriodPoint::at: dist must be positive");
    TriodPoint p;
    p.branch_ = b;
    p.dist_ = std::move(dist);
    return p;
  }

  bool is_center() const { return !branch_.has_value(); }
  BranchId branch() const {
    if (!branch_) throw CenterPoint("branch() on the branching point");
    return *branch_;
  }
  const Rational& dist() const { return dist_; }

  friend bool operator==(const TriodPoint& a, const TriodPoint& b) {
    return a.branch_ == b.branch_ && a.dist_ == b.dist_;
  }

 private:
  TriodPoint() : dist_(0) {}
  std::optional<BranchId> branch_;
  Rational dist_;
};

// x >= y in the branch order: equal, or same branch with x at least as far
// from the center. The center is comparable only with itself.
bool point_geq(const TriodPoint& x, const TriodPoint& y);

// Arclength of the unique arc between two points (through the center when
// they lie on distinct branches).
Rational path_length(const TriodPoint& a, const TriodPoint& b);

// Displacement between branches: j/3 when the target branch is j steps after
// the source branch cyclically.
Rational displacement(BranchId from, BranchId to);
int displacement_thirds(BranchId from, BranchId to);

// Throws CenterPoint if either argument is the branching point.
Rational displacement(const TriodPoint& x, const TriodPoint& y);

// Position of an orbit point: which branch and how many pattern points of
// that branch lie weakly inside it (rank 1 = closest to the center).
struct Placement {
  BranchId branch;
  int rank;  // >= 1

  friend constexpr auto operator<=>(const Placement& a, const Placement& b) {
    if (auto c = a.branch <=> b.branch; c != 0) return c;
    return a.rank <=> b.rank;
  }
  friend constexpr bool operator==(const Placement&, const Placement&) = default;
};

struct RotationPair {
  int p = 0;  // total displacement of the orbit, a whole number
  int q = 1;  // period
  Rational rho() const { return Rational(p, q); }
  friend bool operator==(const RotationPair&, const RotationPair&) = default;
};

struct ModifiedRotationPair {
  Rational rho;  // s/t in lowest terms
  int mult = 1;  // u with (p, q) = (u*s, u*t)
  friend bool operator==(const ModifiedRotationPair&, const ModifiedRotationPair&) = default;
};

// A cyclic pattern of period q: the orbit-indexed sequence of placements,
// step k mapping to step (k+1) mod q. Within each occupied branch the ranks
// are exactly 1..k_beta.
class TriodPattern {
 public:
  explicit TriodPattern(std::vector<Placement> steps);

  int period() const { return static_cast<int>(steps_.size()); }
  const std::vector<Placement>& steps() const { return steps_; }
  const Placement& step(int k) const { return steps_[mod(k)]; }
  int branch_count(BranchId b) const { return counts_[b.value()]; }
  int degrees_of_freedom() const;

  // Index of a placement in the orbit; throws if absent.
  int step_of(const Placement& pl) const;
  Placement successor(const Placement& pl) const { return step(step_of(pl) + 1); }

  Rational step_displacement(int k) const;
  int step_displacement_thirds(int k) const;
  RotationPair rotation_pair() const;
  ModifiedRotationPair modified_rotation_pair() const;

  // Reindexes the orbit to start at the lexicographically least placement.
  // Two patterns are equal exactly when their canonical forms coincide.
  TriodPattern canonical_form() const;
  bool is_canonical() const;

  // Relabels every branch b as b+j; ranks and orbit order unchanged.
  TriodPattern one_third_flip(int j) const;

  friend bool operator==(const TriodPattern& a, const TriodPattern& b) {
    return a.steps_ == b.steps_;
  }

 private:
  int mod(int k) const {
    int q = period();
    return ((k % q) + q) % q;
  }
  std::vector<Placement> steps_;
  std::array<int, 3> counts_{};
};

// Equality as patterns (canonical forms identical).
bool pattern_equal(const TriodPattern& a, const TriodPattern& b);

// True when df = 3 and each branch's rank-1 point maps into the next branch.
bool has_inner_ring(const TriodPattern& p);

// Canonical representative with the inner ring verified; throws NoInnerRing
// when the three rank-1 points do not step b_i -> b_{i+1}. Ring orientation
// is label-rotation invariant, so no relabeling is ever required beyond the
// canonical reindexing.
TriodPattern normalize_branch_order(const TriodPattern& p);

// Period-2q pattern with block structure over p: each point becomes an
// adjacent pair, the pairs map onward like the original points, and the
// return map swaps the two copies so the result is a single cycle. The
// rotation pair doubles.
TriodPattern block_double(const TriodPattern& p);

}  // namespace triodrot
