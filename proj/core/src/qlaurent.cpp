#include "turaev/qlaurent.hpp"

namespace turaev {

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QLaurent::QLaurent(long low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void QLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

QLaurent QLaurent::monomial(long exp, const Rational& c) { return QLaurent(exp, {c}); }

QLaurent QLaurent::from(const LaurentPoly& p) {
  if (p.nvars() != 1) throw PreconditionError("expected a one-variable polynomial");
  if (p.is_zero()) return {};
  const long lo = p.min_exponents()[0], hi = p.max_exponents()[0];
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = Rational(v);
  return QLaurent(lo, std::move(c));
}

long QLaurent::span() const { return is_zero() ? 0 : static_cast<long>(coeffs_.size()) - 1; }

QLaurent QLaurent::operator+(const QLaurent& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const long lo = std::min(low_, rhs.low_), hi = std::max(high(), rhs.high());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    c[static_cast<std::size_t>(rhs.low_ - lo) + i] += rhs.coeffs_[i];
  return QLaurent(lo, std::move(c));
}

QLaurent QLaurent::operator-() const {
  QLaurent out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QLaurent QLaurent::operator-(const QLaurent& rhs) const { return *this + (-rhs); }

QLaurent QLaurent::operator*(const QLaurent& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return QLaurent(low_ + rhs.low_, std::move(c));
}

QLaurent QLaurent::normalized() const {
  if (is_zero()) return {};
  return QLaurentDomain::normal_unit(*this) * *this;
}

std::string QLaurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const long e = low_ + static_cast<long>(i);
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    const Rational mag = abs(c);
    std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

void QLaurentDomain::divmod(const QLaurent& a, const QLaurent& b, QLaurent& q, QLaurent& r) {
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  // Divide t^{-low} a by t^{-low} b as ordinary polynomials; the remainder
  // has smaller degree, hence smaller span.
  if (a.is_zero()) {
    q = {};
    r = {};
    return;
  }
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quo(rem.size() >= bc.size() ? rem.size() - db : 0, Rational(0));
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational f = rem[k + db] / bc.back();
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
  }
  q = QLaurent(a.low() - b.low(), std::move(quo));
  r = QLaurent(a.low(), std::move(rem));
}

QLaurent QLaurentDomain::normal_unit(const QLaurent& a) {
  if (a.is_zero()) return one();
  return QLaurent::monomial(-a.low(), 1 / a.leading());
}

QLaurent QLaurentDomain::unit_inverse(const QLaurent& u) {
  if (!u.is_unit()) throw InternalError("inverting a non-unit");
  return QLaurent::monomial(-u.low(), 1 / u.leading());
}

QLaurent q_gcd(const QLaurent& a, const QLaurent& b) {
  QLaurent x = a, y = b;
  while (!y.is_zero()) {
    QLaurent q, r;
    QLaurentDomain::divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

}  // namespace turaev
