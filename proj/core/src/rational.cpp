#include "effalg/rational.hpp"

#include <stdexcept>

namespace effalg {

Rational fraction(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view whole(s);
  if (slash == std::string::npos) {
    if (!digits_ok(whole, true)) throw bad();
  } else {
    if (!digits_ok(whole.substr(0, slash), true) || !digits_ok(whole.substr(slash + 1), false))
      throw bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace effalg
