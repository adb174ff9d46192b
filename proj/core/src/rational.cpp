#include "triodrot/rational.hpp"

#include <cctype>

namespace triodrot {

std::string to_slash_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(BigInt(s));
    }
    std::string n = s.substr(0, slash);
    std::string d = s.substr(slash + 1);
    if (!is_int(n) || !is_int(d)) return std::nullopt;
    BigInt den(d);
    if (den == 0) return std::nullopt;
    return Rational(BigInt(n), den);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace triodrot
