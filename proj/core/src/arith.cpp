#include "turaev/arith.hpp"

#include <cctype>

namespace turaev {

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view body = text.substr(b, e - b);
  auto valid_int = [](std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(body)) throw ParseError("invalid rational '" + std::string(body) + "'", b);
    return Rational(to_int(body));
  }
  const auto num = body.substr(0, slash);
  const auto den = body.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("invalid rational '" + std::string(body) + "'", b);
  const Integer d = to_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(body) + "'", b + slash);
  return make_rational(to_int(num), d);
}

}  // namespace turaev
