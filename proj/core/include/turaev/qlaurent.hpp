#pragma once

#include <string>
#include <vector>

#include "turaev/arith.hpp"
#include "turaev/laurent.hpp"
#include "turaev/matrix.hpp"

namespace turaev {

/// One-variable Laurent polynomial over Q: t^low * (c_0 + c_1 t + ...).
/// Stored trimmed, so c_0 and the last coefficient are nonzero.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c);  // NOLINT: constants convert implicitly
  QLaurent(long low, std::vector<Rational> coeffs);

  static QLaurent monomial(long exp, const Rational& c = 1);
  static QLaurent from(const LaurentPoly& p);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_unit() const noexcept { return coeffs_.size() == 1; }
  long low() const noexcept { return low_; }
  long high() const noexcept { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Degree span high - low; 0 for units.
  long span() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  QLaurent operator+(const QLaurent& rhs) const;
  QLaurent operator-(const QLaurent& rhs) const;
  QLaurent operator-() const;
  QLaurent operator*(const QLaurent& rhs) const;

  /// Monic with lowest exponent 0.
  QLaurent normalized() const;

  std::string to_string(const std::string& var = "t") const;

  bool operator==(const QLaurent&) const = default;

 private:
  void trim();

  long low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Euclidean structure on Q[t^{+-1}] with norm = degree span.
struct QLaurentDomain {
  using value_type = QLaurent;
  static QLaurent zero() { return {}; }
  static QLaurent one() { return QLaurent(Rational(1)); }
  static bool is_zero(const QLaurent& a) { return a.is_zero(); }
  static long norm(const QLaurent& a) { return a.span(); }
  static void divmod(const QLaurent& a, const QLaurent& b, QLaurent& q, QLaurent& r);
  static QLaurent normal_unit(const QLaurent& a);
  static QLaurent unit_inverse(const QLaurent& u);
};

using QtMatrix = Matrix<QLaurent>;

/// Euclidean gcd in Q[t^{+-1}], normalized. Independent of the integer
/// multivariable gcd, used as a cross-check.
QLaurent q_gcd(const QLaurent& a, const QLaurent& b);

}  // namespace turaev
