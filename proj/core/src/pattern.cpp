#include "triodrot/pattern.hpp"

#include <algorithm>
#include <numeric>

namespace triodrot {

bool point_geq(const TriodPoint& x, const TriodPoint& y) {
  if (x == y) return true;
  if (x.is_center() || y.is_center()) return false;
  return x.branch() == y.branch() && x.dist() >= y.dist();
}

Rational path_length(const TriodPoint& a, const TriodPoint& b) {
  if (!a.is_center() && !b.is_center() && a.branch() == b.branch())
    return abs(a.dist() - b.dist());
  return a.dist() + b.dist();
}

int displacement_thirds(BranchId from, BranchId to) {
  return ((to.value() - from.value()) % 3 + 3) % 3;
}

Rational displacement(BranchId from, BranchId to) {
  return Rational(displacement_thirds(from, to), 3);
}

Rational displacement(const TriodPoint& x, const TriodPoint& y) {
  if (x.is_center() || y.is_center())
    throw CenterPoint("displacement is undefined at the branching point");
  return displacement(x.branch(), y.branch());
}

TriodPattern::TriodPattern(std::vector<Placement> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw InvalidPattern("pattern must have at least one point");
  for (const auto& pl : steps_) {
    if (pl.rank < 1) throw InvalidPattern("rank must be positive");
    ++counts_[pl.branch.value()];
  }
  // Ranks on each branch must be exactly 1..k_beta; this also forces all
  // placements to be distinct, so the successor-by-index orbit is a single
  // cycle.
  std::array<std::vector<char>, 3> seen;
  for (int b = 0; b < 3; ++b) seen[b].assign(counts_[b] + 1, 0);
  for (const auto& pl : steps_) {
    int b = pl.branch.value();
    if (pl.rank > counts_[b]) throw InvalidPattern("rank exceeds branch occupancy");
    if (seen[b][pl.rank]) throw InvalidPattern("duplicate rank on a branch");
    seen[b][pl.rank] = 1;
  }
}

int TriodPattern::degrees_of_freedom() const {
  int df = 0;
  for (int b = 0; b < 3; ++b)
    if (counts_[b] > 0) ++df;
  return df;
}

int TriodPattern::step_of(const Placement& pl) const {
  for (int k = 0; k < period(); ++k)
    if (steps_[k] == pl) return k;
  throw InvalidPattern("placement not in pattern");
}

Rational TriodPattern::step_displacement(int k) const {
  return Rational(step_displacement_thirds(k), 3);
}

int TriodPattern::step_displacement_thirds(int k) const {
  return displacement_thirds(step(k).branch, step(k + 1).branch);
}

RotationPair TriodPattern::rotation_pair() const {
  int thirds = 0;
  for (int k = 0; k < period(); ++k) thirds += step_displacement_thirds(k);
  TRIODROT_CHECK(thirds % 3 == 0, "orbit displacement must sum to a whole number");
  return RotationPair{thirds / 3, period()};
}

ModifiedRotationPair TriodPattern::modified_rotation_pair() const {
  RotationPair rp = rotation_pair();
  int u = std::gcd(rp.p, rp.q);
  if (u == 0) u = rp.q;  // p == 0: rho = 0/1, mult = q
  return ModifiedRotationPair{Rational(rp.p, rp.q), u};
}

TriodPattern TriodPattern::canonical_form() const {
  int best = 0;
  for (int k = 1; k < period(); ++k)
    if (steps_[k] < steps_[best]) best = k;
  std::vector<Placement> rot(steps_.begin() + best, steps_.end());
  rot.insert(rot.end(), steps_.begin(), steps_.begin() + best);
  return TriodPattern(std::move(rot));
}

bool TriodPattern::is_canonical() const {
  for (int k = 1; k < period(); ++k)
    if (steps_[k] < steps_[0]) return false;
  return true;
}

TriodPattern TriodPattern::one_third_flip(int j) const {
  std::vector<Placement> flipped = steps_;
  for (auto& pl : flipped) pl.branch = pl.branch.next(j);
  return TriodPattern(std::move(flipped));
}

bool pattern_equal(const TriodPattern& a, const TriodPattern& b) {
  return a.canonical_form() == b.canonical_form();
}

namespace {

// Branch of the image of each branch's rank-1 point; requires df = 3.
std::array<BranchId, 3> rank_one_successor_branches(const TriodPattern& p) {
  std::array<BranchId, 3> out{kBranch0, kBranch0, kBranch0};
  for (int b = 0; b < 3; ++b)
    out[b] = p.successor(Placement{BranchId(b), 1}).branch;
  return out;
}

}  // namespace

bool has_inner_ring(const TriodPattern& p) {
  if (p.degrees_of_freedom() != 3) return false;
  auto succ = rank_one_successor_branches(p);
  for (int b = 0; b < 3; ++b)
    if (succ[b] != BranchId(b).next()) return false;
  return true;
}

TriodPattern normalize_branch_order(const TriodPattern& p) {
  if (p.degrees_of_freedom() != 3)
    throw NoInnerRing("pattern occupies fewer than three branches");
  if (!has_inner_ring(p))
    throw NoInnerRing(
        "rank-1 points do not step cyclically b_i -> b_{i+1}; no label rotation fixes this");
  return p.canonical_form();
}

TriodPattern block_double(const TriodPattern& p) {
  int q = p.period();
  std::vector<Placement> steps;
  steps.reserve(2 * q);
  // First pass uses the inner copy of each point, second pass the outer; the
  // hand-off between passes is the swap that welds one 2q-cycle.
  for (int pass = 0; pass < 2; ++pass)
    for (int k = 0; k < q; ++k) {
      const Placement& pl = p.step(k);
      steps.push_back(Placement{pl.branch, 2 * pl.rank - 1 + pass});
    }
  return TriodPattern(std::move(steps));
}

}  // namespace triodrot
