#include "compord/rational.hpp"

#include <cctype>

namespace compord {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

Error bad(std::string_view text) {
  return Error("parse-error", "not a rational number: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw bad(text);
    BigInt d(std::string(den), 10);
    if (d == 0)
      throw Error("parse-error", "zero denominator in '" + std::string(text) + "'");
    r = Rational(BigInt(std::string(num), 10), d);
    r.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw bad(text);
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    r = Rational(BigInt(digits, 10), den);
    r.canonicalize();
  } else {
    if (!all_digits(s))
      throw bad(text);
    r = Rational(BigInt(std::string(s), 10));
  }
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational &r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_str();
}

} // namespace compord
