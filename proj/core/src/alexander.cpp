#include "turaev/alexander.hpp"

#include <bit>

namespace turaev {

namespace {

void accumulate(GroupRingElement& e, const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = e.emplace(w.reduced(), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

}  // namespace

GroupRingElement fox_derivative(const FreeWord& w, std::size_t gen) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == gen && l.exp == 1) accumulate(out, FreeWord(prefix), 1);
    prefix.push_back(l);
    if (l.gen == gen && l.exp == -1) accumulate(out, FreeWord(prefix), -1);
  }
  return out;
}

std::string format_group_ring(const Presentation& p, const GroupRingElement& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : e) {
    const Integer mag = abs(c);
    const std::string word = w.empty() ? "1" : p.format_word(w);
    const std::string body = mag == 1 ? word : mag.get_str() + (w.empty() ? "" : "*" + word);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

bool fox_identity_holds(const FreeWord& r, std::size_t num_generators) {
  GroupRingElement lhs;
  for (std::size_t i = 0; i < num_generators; ++i) {
    const FreeWord x({Letter{i, 1}});
    for (const auto& [w, c] : fox_derivative(r, i)) {
      accumulate(lhs, w * x, c);
      accumulate(lhs, w, -c);
    }
  }
  GroupRingElement rhs;
  accumulate(rhs, r, 1);
  accumulate(rhs, FreeWord(), -1);
  return lhs == rhs;
}

LaurentPoly push_forward(const GroupRingElement& e, const AbelianizationMap& psi) {
  LaurentPoly out(psi.rank());
  for (const auto& [w, c] : e) out.add_term(psi.image(w), c);
  return out;
}

LaurentMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& psi) {
  if (psi.num_generators() != p.num_generators())
    throw PreconditionError("abelianization map has the wrong number of generators");
  psi.require_valid_on(p);
  const std::size_t n = p.num_relators(), m = p.num_generators(), k = psi.rank();
  LaurentMatrix a(n, m, LaurentPoly(k));
  std::vector<LaurentPoly> x_minus_one;
  for (std::size_t i = 0; i < m; ++i)
    x_minus_one.push_back(LaurentPoly::monomial(psi.image(i)) - LaurentPoly::constant(k, 1));
  for (std::size_t j = 0; j < n; ++j) {
    const FreeWord& r = p.relators()[j];
    if (!fox_identity_holds(r, m)) throw InternalError("Fox identity fails in the free group ring");
    LaurentPoly check(k);
    for (std::size_t i = 0; i < m; ++i) {
      a(j, i) = push_forward(fox_derivative(r, i), psi);
      check += a(j, i) * x_minus_one[i];
    }
    if (!check.is_zero()) throw InternalError("Fox identity fails after abelianization");
  }
  return a;
}

std::vector<Minor> codimension_one_minors(const LaurentMatrix& a, std::size_t nvars) {
  const std::size_t n = a.rows(), m = a.cols();
  if (m == 0) throw PreconditionError("matrix has no columns");
  if (m > 24) throw PreconditionError("too many generators for minor enumeration");
  const std::size_t k = m - 1;
  std::vector<Minor> out;
  if (n < k) return out;
  if (k == 0) {
    out.push_back({{}, 0, LaurentPoly::constant(nvars, 1)});
    return out;
  }

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  for (;;) {
    // det[S] for |S| = level uses rows[0..level-1] and the columns of S in
    // increasing order; expand along the last of those rows.
    std::vector<LaurentPoly> det(std::size_t{1} << m, LaurentPoly(nvars));
    std::vector<bool> live(det.size(), false);
    det[0] = LaurentPoly::constant(nvars, 1);
    live[0] = true;
    for (std::size_t level = 1; level <= k; ++level) {
      const std::size_t r = rows[level - 1];
      for (std::uint32_t s = 1; s <= full; ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) != level) continue;
        LaurentPoly acc(nvars);
        bool any = false;
        std::size_t pos = 0;
        for (std::size_t j = 0; j < m; ++j) {
          if (!(s >> j & 1U)) continue;
          const std::uint32_t rest = s & ~(std::uint32_t{1} << j);
          if (live[rest] && !det[rest].is_zero() && !a(r, j).is_zero()) {
            LaurentPoly term = a(r, j) * det[rest];
            if ((level - 1 + pos) % 2 == 1) term = -term;
            acc += term;
            any = true;
          }
          ++pos;
        }
        det[s] = std::move(acc);
        live[s] = any;
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t s = full & ~(std::uint32_t{1} << j);
      out.push_back({rows, j, live[s] ? det[s] : LaurentPoly(nvars)});
    }

    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t t = i; t < k; ++t) rows[t] = rows[t - 1] + 1;
  }
  return out;
}

LaurentPoly alexander_polynomial(const Presentation& p, const AbelianizationMap& psi) {
  if (psi.rank() == 0)
    throw PreconditionError("Alexander polynomial needs b_1 >= 1 (H_1/torsion is trivial)");
  if (p.num_generators() == 0) throw PreconditionError("presentation has no generators");
  const auto minors = codimension_one_minors(alexander_matrix(p, psi), psi.rank());
  LaurentPoly g(psi.rank());
  for (const auto& mnr : minors) {
    if (g.is_unit()) break;
    g = laurent_gcd(g, mnr.value);
  }
  return g;
}

LaurentPoly alexander_polynomial(const Presentation& p) {
  return alexander_polynomial(p, free_abelianization(p));
}

LaurentPoly alexander_polynomial(const Presentation& p, const CohomClass& phi) {
  if (phi.is_zero()) throw PreconditionError("class is zero");
  return alexander_polynomial(p, AbelianizationMap::from_class(p, phi));
}

}  // namespace turaev
