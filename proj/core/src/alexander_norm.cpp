#include "turaev/alexander_norm.hpp"

#include "turaev/abelian.hpp"
#include "turaev/alexander.hpp"
#include "turaev/divisibility.hpp"
#include "turaev/lp.hpp"

namespace turaev {

std::vector<Exponent> support(const LaurentPoly& delta) {
  std::vector<Exponent> out;
  for (const auto& [e, c] : delta.terms()) out.push_back(e);
  return out;
}

Rational alexander_norm(const LaurentPoly& delta, const std::vector<Rational>& phi) {
  if (phi.size() != delta.nvars()) throw PreconditionError("class has wrong rank");
  if (delta.is_zero()) return 0;
  bool first = true;
  Rational lo, hi;
  for (const auto& [e, c] : delta.terms()) {
    Rational v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += phi[i] * e[i];
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return hi - lo;
}

std::vector<Exponent> newton_polytope_vertices(const LaurentPoly& delta) {
  if (delta.nvars() > 3) throw PreconditionError("polytope vertices are only reported for rank <= 3");
  const auto pts = support(delta);
  const std::size_t d = delta.nvars();
  std::vector<Exponent> out;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    // Feasibility of p = sum lambda_q q, sum lambda_q = 1, lambda >= 0.
    std::vector<std::size_t> others;
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (q != p) others.push_back(q);
    if (others.empty()) {
      out.push_back(pts[p]);
      continue;
    }
    LinearProgram lp;
    lp.a = Matrix<Rational>(d + 1, others.size(), Rational(0));
    lp.b.assign(d + 1, Rational(0));
    lp.c.assign(others.size(), Rational(0));
    for (std::size_t j = 0; j < others.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) lp.a(i, j) = pts[others[j]][i];
      lp.a(d, j) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) lp.b[i] = pts[p][i];
    lp.b[d] = 1;
    if (solve_lp(lp).status == LpSolution::Status::Infeasible) out.push_back(pts[p]);
  }
  return out;
}

LowerBounds lower_bounds(const Presentation& p, const CohomClass& phi) {
  require_class(p, phi);
  LowerBounds out;
  const auto psi = free_abelianization(p);
  out.b1 = psi.rank();
  out.delta = LaurentPoly(out.b1);
  if (out.b1 == 0) {
    out.notes.push_back("b1 = 0: no Alexander polynomial, no lower bounds");
    return out;
  }
  out.phi_coords = class_coordinates(p, psi, phi);
  out.delta = alexander_polynomial(p, psi);

  if (out.b1 < 2) {
    out.notes.push_back("a-bound skipped: b1 = " + std::to_string(out.b1) + " < 2");
  } else if (out.delta.is_zero()) {
    out.notes.push_back("a-bound skipped: Alexander polynomial is zero (degenerate)");
  } else {
    out.a_bound = alexander_norm(out.delta, out.phi_coords);
    out.notes.push_back("a-bound applies: b1 >= 2 and Alexander polynomial nonzero");
  }

  if (phi.is_zero()) {
    out.notes.push_back("degree bound skipped: class is zero");
  } else if (!phi.is_integral()) {
    out.notes.push_back("degree bound skipped: class is not integral");
  } else {
    out.divisibility = divisibility(p, phi);
    out.delta_phi = alexander_polynomial(p, restrict_class(p, phi));
    if (out.delta_phi->is_zero()) {
      out.notes.push_back("degree bound skipped: one-variable Alexander polynomial is zero");
    } else if (*out.divisibility != 1) {
      out.notes.push_back("degree bound skipped: class has divisibility " + out.divisibility->get_str());
    } else {
      out.deg_bound = Rational(degree(*out.delta_phi) - 1);
      out.notes.push_back("degree bound applies: class primitive and one-variable polynomial nonzero");
    }
  }
  return out;
}

}  // namespace turaev
