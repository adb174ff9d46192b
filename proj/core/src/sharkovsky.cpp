#include "triodrot/sharkovsky.hpp"

#include <stdexcept>
#include <utility>

namespace triodrot {

SharkovskyDegree SharkovskyDegree::of(int n) {
  if (n < 1) throw std::invalid_argument("Sharkovsky degree must be positive");
  return {false, n};
}

std::string SharkovskyDegree::str() const {
  return two_infinity ? "2^inf" : std::to_string(value);
}

namespace {

// Splits n as 2^a * b with b odd.
std::pair<int, int> split_pow2(int n) {
  int a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++a;
  }
  return {a, n};
}

}  // namespace

// Order, sharpest first:
//   3, 5, 7, ...  2*3, 2*5, ...  4*3, 4*5, ...   (odd part > 1: by a asc, b asc)
//   2^inf
//   ..., 8, 4, 2, 1                              (powers of two, a desc)
bool sharkovsky_leq(const SharkovskyDegree& m, const SharkovskyDegree& n) {
  if (m == n) return true;
  auto cls = [](const SharkovskyDegree& d) {
    if (d.two_infinity) return 1;
    auto [a, b] = split_pow2(d.value);
    return b > 1 ? 0 : 2;
  };
  int cm = cls(m), cn = cls(n);
  if (cm != cn) return cm < cn;
  auto [am, bm] = split_pow2(m.value);
  auto [an, bn] = split_pow2(n.value);
  if (cm == 0) return am != an ? am < an : bm < bn;
  return am > an;  // powers of two: larger power is sharper
}

SharkovskyDegree sharkovsky_sharpest(const SharkovskyDegree& a, const SharkovskyDegree& b) {
  return sharkovsky_leq(a, b) ? a : b;
}

}  // namespace triodrot
