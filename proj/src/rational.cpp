#include "loopalg/rational.hpp"

#include <stdexcept>

namespace loopalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational: " + std::string(text));
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace loopalg
