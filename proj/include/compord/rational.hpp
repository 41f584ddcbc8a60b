#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace compord {

using Rational = mpq_class;
using BigInt = mpz_class;

// Failure with a stable machine-readable code, e.g. "bot-has-no-angle".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}
  explicit Error(std::string code) : Error(code, code) {}
  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

// Accepts "p", "p/q", with optional sign, and finite decimals such as "-1.25".
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);

inline int sign(const Rational &r) { return sgn(r); }

} // namespace compord
