#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace turaev {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (presentations, complexes, PD codes, classes).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition was not met (e.g. non-empty boundary).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace turaev
