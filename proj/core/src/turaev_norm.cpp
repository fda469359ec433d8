#include "turaev/turaev_norm.hpp"

#include <optional>

#include "turaev/lp.hpp"

namespace turaev {

namespace {

std::vector<Rational> edge_weights(const TwoComplex& x) {
  std::vector<Rational> w;
  for (auto n : x.edge_multiplicities()) {
    if (n < 2) throw PreconditionError("complex has nonempty boundary (an edge with n_e < 2)");
    w.push_back(make_rational(static_cast<long>(n), 2) - 1);
  }
  return w;
}

Rational weighted(const std::vector<Rational>& w, const Cochain1& k) {
  Rational s = 0;
  for (std::size_t e = 0; e < w.size(); ++e) s += w[e] * abs(k[e]);
  return s;
}

struct IntegralOptimum {
  Cochain1 cochain;
  Rational value;
};

// Returns nullopt if the LP vertex is not integral.
std::optional<IntegralOptimum> solve_by_lp(const TwoComplex& x, const std::vector<Rational>& w,
                                           const Cochain1& k0) {
  const std::size_t ne = x.num_edges();
  const std::size_t nf = x.num_vertices() - 1;  // vertex 0 pinned to 0
  const std::size_t z0 = 0, p0 = ne, m0 = ne + nf, s1 = ne + 2 * nf, s2 = s1 + ne;
  const std::size_t nvars = s2 + ne;

  LinearProgram lp;
  lp.a = Matrix<Rational>(2 * ne, nvars, Rational(0));
  lp.b.assign(2 * ne, Rational(0));
  lp.c.assign(nvars, Rational(0));
  auto add_potential = [&](std::size_t row, std::size_t v, int coeff) {
    if (v == 0) return;
    lp.a(row, p0 + v - 1) += coeff;
    lp.a(row, m0 + v - 1) -= coeff;
  };
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = x.edges()[e];
    const std::size_t r1 = 2 * e, r2 = 2 * e + 1;
    // z_e - (f_t - f_s) - s1_e = k0(e)
    lp.a(r1, z0 + e) = 1;
    add_potential(r1, edge.target, -1);
    add_potential(r1, edge.source, +1);
    lp.a(r1, s1 + e) = -1;
    lp.b[r1] = k0[e];
    // z_e + (f_t - f_s) - s2_e = -k0(e)
    lp.a(r2, z0 + e) = 1;
    add_potential(r2, edge.target, +1);
    add_potential(r2, edge.source, -1);
    lp.a(r2, s2 + e) = -1;
    lp.b[r2] = -k0[e];
    lp.c[z0 + e] = w[e];
  }
  const auto sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) throw InternalError("Turaev LP did not reach an optimum");

  std::vector<Rational> f(x.num_vertices(), Rational(0));
  for (std::size_t v = 1; v < x.num_vertices(); ++v) f[v] = sol.x[p0 + v - 1] - sol.x[m0 + v - 1];
  for (const auto& fv : f)
    if (!is_integral(fv)) return std::nullopt;
  IntegralOptimum out{k0 + coboundary(x, f), Rational(0)};
  out.value = weighted(w, out.cochain);
  if (out.value != sol.objective) throw InternalError("LP objective disagrees with recomputed weight");
  return out;
}

IntegralOptimum solve_by_brute_force(const TwoComplex& x, const std::vector<Rational>& w,
                                     const Cochain1& k0, const Integer& bound) {
  // Potentials matter only through positive-weight edges: pin one vertex of
  // each component of the positive-weight subgraph and leave vertices that
  // meet no positive edge at zero.
  const std::size_t nv = x.num_vertices();
  std::vector<std::size_t> comp(nv);
  for (std::size_t v = 0; v < nv; ++v) comp[v] = v;
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  std::vector<bool> touched(nv, false);
  for (std::size_t e = 0; e < x.num_edges(); ++e) {
    if (w[e] == 0) continue;
    const auto& edge = x.edges()[e];
    touched[edge.source] = touched[edge.target] = true;
    const auto a = find(edge.source), b = find(edge.target);
    if (a != b) comp[a < b ? b : a] = a < b ? a : b;
  }
  std::vector<std::size_t> free_vertices;
  for (std::size_t v = 0; v < nv; ++v)
    if (touched[v] && find(v) != v) free_vertices.push_back(v);

  const long b = bound.get_si();
  Integer combos = 1;
  for (std::size_t i = 0; i < free_vertices.size(); ++i) combos *= 2 * b + 1;
  if (combos > 50000000) throw PreconditionError("brute-force search box too large (" + combos.get_str() + " points)");

  std::vector<Rational> f(nv, Rational(0));
  std::vector<long> digits(free_vertices.size(), -b);
  for (std::size_t i = 0; i < free_vertices.size(); ++i) f[free_vertices[i]] = -b;
  std::optional<IntegralOptimum> best;
  for (;;) {
    Cochain1 k = k0 + coboundary(x, f);
    Rational val = weighted(w, k);
    if (!best || val < best->value) best = IntegralOptimum{std::move(k), val};
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (digits[i] < b) {
        ++digits[i];
        f[free_vertices[i]] = digits[i];
        break;
      }
      digits[i] = -b;
      f[free_vertices[i]] = -b;
    }
    if (i == digits.size()) break;
  }
  return *best;
}

}  // namespace

Rational weight(const TwoComplex& x, const Cochain1& k) {
  if (k.size() != x.num_edges()) throw PreconditionError("cochain has wrong size");
  return weighted(edge_weights(x), k);
}

const char* to_string(NormMethod m) {
  switch (m) {
    case NormMethod::Auto: return "auto";
    case NormMethod::LP: return "lp";
    case NormMethod::Brute: return "brute";
  }
  return "?";
}

const char* to_string(Certificate c) {
  return c == Certificate::BruteForce ? "BruteForce" : "LPIntegral";
}

NormMethod parse_norm_method(std::string_view s) {
  if (s == "auto") return NormMethod::Auto;
  if (s == "lp") return NormMethod::LP;
  if (s == "brute") return NormMethod::Brute;
  throw ParseError("unknown method '" + std::string(s) + "' (expected lp, brute or auto)", 0);
}

Integer brute_force_bound(const TwoComplex& x, const Cochain1& k0) {
  const auto w = edge_weights(x);
  std::optional<Rational> min_w;
  Integer max_k = 0;
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] > 0 && (!min_w || w[e] < *min_w)) min_w = w[e];
    if (!is_integral(k0[e])) throw PreconditionError("brute-force bound needs an integral cocycle");
    max_k = std::max(max_k, Integer(abs(k0[e].get_num())));
  }
  if (!min_w) return max_k;
  const Rational q = weighted(w, k0) / *min_w;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c + max_k;
}

NormResult turaev_norm(const TwoComplex& x, const Cochain1& k, NormMethod method) {
  const auto w = edge_weights(x);
  if (k.size() != x.num_edges()) throw PreconditionError("cochain has wrong size");
  if (!is_cocycle(x, k)) throw PreconditionError("input cochain is not a cocycle");

  // Homogeneity: clear denominators, solve integrally, rescale.
  Integer scale = 1;
  for (const auto& v : k.values()) scale = lcm(scale, v.get_den());
  const Cochain1 k0 = k.scaled(Rational(scale));

  NormResult out;
  IntegralOptimum opt;
  if (method == NormMethod::Brute) {
    opt = solve_by_brute_force(x, w, k0, brute_force_bound(x, k0));
    out.certificate = Certificate::BruteForce;
  } else if (auto lp = solve_by_lp(x, w, k0)) {
    opt = std::move(*lp);
    out.certificate = Certificate::LPIntegral;
  } else {
    opt = solve_by_brute_force(x, w, k0, brute_force_bound(x, k0));
    out.certificate = Certificate::BruteForce;
    out.internal_error = "LP optimum was not integral; fell back to brute force";
  }
  const Rational inv = make_rational(1, scale);
  out.value = opt.value * inv;
  out.optimal_cochain = opt.cochain.scaled(inv);
  return out;
}

NormResult turaev_norm(const TwoComplex& x, const CohomClass& phi, NormMethod method) {
  return turaev_norm(x, cocycle_from_class(x, phi), method);
}

}  // namespace turaev
