#include "turaev/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace turaev {

namespace {

long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

// Graded-lex: total degree first, then lexicographic.
bool graded_less(const Exponent& a, const Exponent& b) {
  const long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// ---------------------------------------------------------------------------
// Ordinary polynomial helpers. All exponents are nonnegative here.

int main_var(const LaurentPoly& p) {
  int v = -1;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && static_cast<int>(i) > v) v = static_cast<int>(i);
  return v;
}

long degree_in(const LaurentPoly& p, std::size_t v) {
  long d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  return d;
}

LaurentPoly coeff_in(const LaurentPoly& p, std::size_t v, long d) {
  LaurentPoly out(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (e[v] == d) {
      Exponent f = e;
      f[v] = 0;
      out.add_term(f, c);
    }
  return out;
}

LaurentPoly sign_normal(const LaurentPoly& p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
  return p;
}

std::optional<LaurentPoly> poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  LaurentPoly q(a.nvars()), r = a;
  const auto& [eb, cb] = *b.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms().rbegin();
    Exponent e(er.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    const LaurentPoly t = LaurentPoly::monomial(e, Integer(cr / cb));
    q += t;
    r = r - t * b;
  }
  return q;
}

LaurentPoly must_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = poly_exact_div(a, b);
  if (!q) throw InternalError("expected exact polynomial division");
  return *q;
}

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const long db = degree_in(b, v);
  const LaurentPoly lcb = coeff_in(b, v, db);
  LaurentPoly r = a;
  while (!r.is_zero() && degree_in(r, v) >= db) {
    const long dr = degree_in(r, v);
    Exponent e(a.nvars(), 0);
    e[v] = dr - db;
    r = lcb * r - coeff_in(r, v, dr) * LaurentPoly::monomial(e) * b;
  }
  return r;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly g(p.nvars());
  for (long d = degree_in(p, v); d >= 0; --d) {
    const LaurentPoly c = coeff_in(p, v, d);
    if (!c.is_zero()) g = poly_gcd(g, c);
  }
  return g;
}

// gcd in Z[t_1..t_k], leading lex coefficient positive. Primitive PRS in the
// highest variable present, recursing on contents.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return sign_normal(b);
  if (b.is_zero()) return sign_normal(a);
  const int vi = std::max(main_var(a), main_var(b));
  if (vi < 0) {
    return LaurentPoly::constant(a.nvars(), gcd(a.terms().begin()->second, b.terms().begin()->second));
  }
  const auto v = static_cast<std::size_t>(vi);
  const LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
  const LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly pa = must_divide(a, ca), pb = must_divide(b, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    LaurentPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? LaurentPoly(a.nvars()) : must_divide(r, content_in(r, v));
  }
  return sign_normal(c * sign_normal(pa));
}

}  // namespace

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Integer& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable_minus_one(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e) - constant(nvars, 1);
}

LaurentPoly LaurentPoly::univariate(const std::vector<std::pair<long, long>>& terms) {
  LaurentPoly p(1);
  for (const auto& [e, c] : terms) p.add_term({e}, c);
  return p;
}

bool LaurentPoly::is_unit() const { return is_monomial() && abs(terms_.begin()->second) == 1; }

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != nvars_) throw PreconditionError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw PreconditionError("variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  out += rhs;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (rhs.nvars_ != nvars_) throw PreconditionError("variable count mismatch");
  LaurentPoly out(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != nvars_) throw PreconditionError("shift has wrong length");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Exponent LaurentPoly::min_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero()) return *this;
  Exponent neg = min_exponents();
  for (auto& x : neg) x = -x;
  LaurentPoly out = shifted(neg);
  auto lead = out.terms_.begin();
  for (auto it = out.terms_.begin(); it != out.terms_.end(); ++it)
    if (graded_less(lead->first, it->first)) lead = it;
  if (lead->second < 0) out = -out;
  return out;
}

bool LaurentPoly::equals_up_to_unit(const LaurentPoly& other) const {
  return nvars_ == other.nvars_ && canonical() == other.canonical();
}

LaurentPoly LaurentPoly::specialize(const std::vector<long>& phi) const {
  if (phi.size() != nvars_) throw PreconditionError("class has wrong rank for specialization");
  LaurentPoly out(1);
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += phi[i] * e[i];
    out.add_term({d}, c);
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars == 1) return {"t"};
  if (nvars == 2) return {"s", "u"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("t" + std::to_string(i + 1));
  return names;
}

std::string LaurentPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::vector<std::pair<Exponent, Integer>> order(terms_.begin(), terms_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const long da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& [e, c] = order[k];
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const Integer mag = abs(c);
    std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (k == 0)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly(a.nvars());
  Exponent ma = a.min_exponents(), mb = b.min_exponents();
  Exponent na = ma, nb = mb, back(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    na[i] = -ma[i];
    nb[i] = -mb[i];
    back[i] = ma[i] - mb[i];
  }
  auto q = poly_exact_div(a.shifted(na), b.shifted(nb));
  if (!q) return std::nullopt;
  return q->shifted(back);
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("variable count mismatch");
  auto to_poly = [](const LaurentPoly& p) {
    Exponent m = p.min_exponents();
    for (auto& x : m) x = -x;
    return p.shifted(m);
  };
  return poly_gcd(to_poly(a), to_poly(b)).canonical();
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& polys) {
  if (polys.empty()) return LaurentPoly(1);
  LaurentPoly g(polys.front().nvars());
  for (const auto& p : polys) {
    if (g.is_unit()) break;
    g = laurent_gcd(g, p);
  }
  return g;
}

long degree(const LaurentPoly& p) {
  if (p.nvars() != 1) throw PreconditionError("degree needs a one-variable polynomial");
  if (p.is_zero()) throw PreconditionError("degree of the zero polynomial is undefined");
  return p.max_exponents()[0] - p.min_exponents()[0];
}

}  // namespace turaev
