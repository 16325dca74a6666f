#include "hombi/rational.hpp"

#include <cctype>

namespace hombi {

namespace {
bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = (t[0] == '-');
    t.remove_prefix(1);
  }
  std::string_view num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace hombi
