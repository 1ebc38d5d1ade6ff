#include "trisplit/rational.hpp"

#include <stdexcept>

namespace trisplit {

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool parse_int(const std::string& s, bool allow_sign, BigInt& out) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') return false;
  }
  out = BigInt(s);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok = false;
  if (slash == std::string::npos) {
    ok = parse_int(text, true, num);
  } else {
    ok = parse_int(text.substr(0, slash), true, num) &&
         parse_int(text.substr(slash + 1), false, den) && den > 0;
  }
  if (!ok) throw std::invalid_argument("malformed rational: \"" + text + "\"");
  return Rational(num, den);
}

}  // namespace trisplit
