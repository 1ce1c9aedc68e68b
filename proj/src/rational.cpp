#include "qv/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qv {

Rat parse_rational(const std::string& text) {
  auto bad = [&] { fail(ErrorKind::InvalidParams, "cannot parse rational '" + text + "'"); };
  std::string s = text;
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rat();  // unreachable
}

std::string format_rational(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
  return g < 0 ? Int(-g) : g;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
  Int lcm_den = 1;
  for (const Rat& e : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(e));
  std::vector<Int> scaled;
  scaled.reserve(v.size());
  for (const Rat& e : v) scaled.push_back(numerator(e) * (lcm_den / denominator(e)));
  Int g = content(scaled);
  if (g > 1)
    for (Int& e : scaled) e /= g;
  return scaled;
}

}  // namespace qv
