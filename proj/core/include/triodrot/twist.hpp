#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triodrot/forcing.hpp"

namespace triodrot {

// Color of an orbit point by the displacement to its image: 0 green, 1/3
// black, 2/3 red. Green points are in-bound or out-bound according to
// whether they map toward or away from the center.
enum class Color { Green, Black, Red };
enum class GreenBound { In, Out };

const char* color_name(Color c);

struct ColorTable {
  std::vector<Color> color;                       // per orbit step
  std::vector<std::optional<GreenBound>> bound;   // set for green steps
  int greens = 0, blacks = 0, reds = 0;
  int outbound_greens = 0;
};

ColorTable color_table(const TriodPattern& p);

// Two lifts of the orbit's angular position.
//
// Cumulative: psi_k = k*rho - D_k with D_k the running displacement sum.
// Verdicts (strict phase, chi bounds) use this one; same-branch differences
// are independent of the base step.
//
// Literal: psi_k = k*rho - L_k where L_k = D_k when D_k is a whole number and
// 0 otherwise. Reduces mod 1 to the rigid rotation k*rho; kept because the
// rho = 1/3 catalog's spread value 2/3 is attained only under it.
enum class PhaseVariant { Cumulative, Literal };

struct PhaseTable {
  PhaseVariant variant;
  int base_step;
  std::vector<Rational> psi;       // indexed by orbit step of the pattern
  std::vector<Rational> cum_disp;  // D_k relative to the base step
};

PhaseTable phase_table(const TriodPattern& p, PhaseVariant variant, int base_step = 0);

struct PairWitness {
  int step_x = -1, step_y = -1;
};

struct CheckResult {
  bool ok = true;
  std::optional<PairWitness> witness;
};

// f(x) >= f(y) for every same-branch pair x > y whose images share a branch.
CheckResult is_order_invariant(const TriodPattern& p);

// Under the cumulative lift: psi strictly decreases outward when rho <= 1/3
// and strictly increases outward when rho > 1/3, on every branch. The
// verdict does not depend on the base step.
CheckResult has_strict_phase(const TriodPattern& p);

struct TwistVerdict {
  enum class Kind { Twist, NotTwist, NotApplicable };
  enum class Reason {
    None,
    NoInnerRing,
    NonCoprime,
    OutboundGreen,
    RedWithLowRho,
    GreenWithHighRho,
    OrderViolation,
    PhaseViolation,
  };
  Kind kind = Kind::NotTwist;
  Reason reason = Reason::None;
  std::optional<PairWitness> witness;

  bool is_twist() const { return kind == Kind::Twist; }
  std::string describe() const;
};

// Decision pipeline: degrees of freedom, inner ring, coprime rotation pair,
// no out-bound green, color gate by rho, then order invariance and strict
// phase.
TwistVerdict is_twist(const TriodPattern& p);

// Spread max psi - min psi over a nonempty set of orbit steps.
Rational chi(const TriodPattern& p, const std::vector<int>& steps, PhaseVariant variant);
Rational chi_all(const TriodPattern& p, PhaseVariant variant);

// Maximal run of same-colored points consecutive along a branch.
struct State {
  Color color;
  BranchId branch;
  std::vector<int> steps;  // ascending rank
};

struct StateDecomposition {
  std::vector<State> states;  // grouped by branch, inner to outer
};

StateDecomposition states(const TriodPattern& p);

// Green states glued along green paths of the point graph.
struct Country {
  std::vector<int> state_indices;  // into StateDecomposition::states
  std::vector<int> steps;          // member green steps
  int kappa_step = -1;             // image of the innermost member
  int lambda_step = -1;            // image of kappa
  std::optional<int> phi;          // successor country, when defined
};

struct CountryDecomposition {
  StateDecomposition state_dec;
  std::vector<Country> countries;
};

CountryDecomposition countries(const TriodPattern& p);

struct BoundCheck {
  std::string name;
  Rational attained;
  Rational bound;
  bool pass = false;
};

struct ChiBoundsReport {
  Rational rho;
  std::vector<BoundCheck> checks;
  bool all_pass = true;
};

// Evaluates every spread bound applicable to the pattern's rotation-number
// regime, exactly, under the cumulative lift. Requires a Twist verdict.
ChiBoundsReport verify_chi_bounds(const TriodPattern& p);

}  // namespace triodrot
