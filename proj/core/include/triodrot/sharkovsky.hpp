#pragma once

#include <string>

namespace triodrot {

// A period in the Sharkovsky order: a positive integer or the symbol 2^inf,
// which sits above every power of two and below every other number.
struct SharkovskyDegree {
  bool two_infinity = false;
  int value = 1;  // ignored when two_infinity

  static SharkovskyDegree of(int n);
  static SharkovskyDegree twoInfinity() { return {true, 0}; }
  std::string str() const;
  friend bool operator==(const SharkovskyDegree&, const SharkovskyDegree&) = default;
};

// True iff n lies in Sh(m), i.e. m is sharper than or equal to n.
bool sharkovsky_leq(const SharkovskyDegree& m, const SharkovskyDegree& n);

// Sharpest degree of a set: the one that is >= all others in the order.
SharkovskyDegree sharkovsky_sharpest(const SharkovskyDegree& a, const SharkovskyDegree& b);

}  // namespace triodrot
