#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turaev/arith.hpp"

namespace turaev {

using Exponent = std::vector<long>;

/// Multivariable Laurent polynomial with integer coefficients, an element of
/// Z[t_1^{+-1}, ..., t_k^{+-1}] = Z[Z^k]. No zero coefficients are stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Integer& c);
  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);
  /// t_i - 1 in k variables.
  static LaurentPoly variable_minus_one(std::size_t nvars, std::size_t i);
  /// Builds a one-variable polynomial from (exponent, coefficient) pairs.
  static LaurentPoly univariate(const std::vector<std::pair<long, long>>& terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// +-monomial: the units of the group ring.
  bool is_unit() const;

  Integer coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Integer& c);

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);

  /// Multiply by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Componentwise minimum / maximum exponent (zero polynomial: all zeros).
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  /// Unit-normalized form: componentwise-minimal exponent 0 and positive
  /// leading coefficient in graded-lex order. canonical(0) = 0.
  LaurentPoly canonical() const;
  bool equals_up_to_unit(const LaurentPoly& other) const;

  /// Substitute t^v -> t^{phi . v}; result has one variable.
  LaurentPoly specialize(const std::vector<long>& phi) const;

  /// Terms in graded order, e.g. "1 - t + t^2" or "1 - s - u + s*u".
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::size_t nvars_;
  std::map<Exponent, Integer> terms_;
};

/// Default variable names: t for one variable, s,u for two, t1..tk otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in the UFD Z[t^{+-1}]; unit-normalized. gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys);

/// s - r for a one-variable polynomial with exponents r..s. Throws
/// PreconditionError for the zero polynomial or for several variables.
long degree(const LaurentPoly& p);

}  // namespace turaev
