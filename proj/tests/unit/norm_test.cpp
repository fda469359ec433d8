#include <gtest/gtest.h>

#include <functional>
#include <queue>
#include <random>

#include "turaev/lp.hpp"
#include "turaev/turaev_norm.hpp"

using namespace turaev;

namespace {

struct Instance {
  TwoComplex complex;
  std::vector<long> k0;
};

// Connected graph, random integer values on edges, faces = closed walks with
// zero value, then backtracking faces e e^-1 until every n_e >= 2.
Instance random_instance(std::mt19937& rng) {
  const std::size_t nv = 1 + rng() % 8;
  const std::size_t ne = std::max<std::size_t>(nv, 1 + rng() % 16);
  const long kmax = 1 + static_cast<long>(rng() % 3);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < nv; ++v) edges.push_back({rng() % v, v, ""});
  while (edges.size() < ne) edges.push_back({rng() % nv, rng() % nv, ""});
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<long> k(edges.size());
  for (auto& v : k) v = static_cast<long>(rng() % (2 * kmax + 1)) - kmax;

  std::vector<std::vector<WalkStep>> out(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[edges[e].source].push_back({e, 1});
    out[edges[e].target].push_back({e, -1});
  }
  auto end_of = [&](const WalkStep& s) { return s.dir > 0 ? edges[s.edge].target : edges[s.edge].source; };
  // Tree paths back to vertex 0.
  std::vector<std::optional<WalkStep>> back(nv);
  std::vector<bool> seen(nv, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (const auto& s : out[v]) {
      const std::size_t w = end_of(s);
      if (seen[w]) continue;
      seen[w] = true;
      back[w] = WalkStep{s.edge, -s.dir};
      q.push(w);
    }
  }
  std::vector<AttachingWalk> faces;
  for (int attempt = 0; attempt < 40 && faces.size() < 6; ++attempt) {
    AttachingWalk walk;
    std::size_t v = 0;
    const std::size_t len = 1 + rng() % 6;
    for (std::size_t i = 0; i < len; ++i) {
      const auto& s = out[v][rng() % out[v].size()];
      walk.push_back(s);
      v = end_of(s);
    }
    while (v != 0) {
      walk.push_back(*back[v]);
      v = end_of(*back[v]);
    }
    long sum = 0;
    for (const auto& s : walk) sum += s.dir * k[s.edge];
    if (sum == 0) faces.push_back(walk);
  }
  std::vector<std::size_t> n(edges.size(), 0);
  for (const auto& f : faces)
    for (const auto& s : f) ++n[s.edge];
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (n[e] < 2 || rng() % 4 == 0) faces.push_back({{e, 1}, {e, -1}});
  return {TwoComplex(nv, edges, faces), k};
}

std::vector<long> multiplicities(const TwoComplex& x) {
  std::vector<long> n(x.num_edges(), 0);
  for (const auto& f : x.faces())
    for (const auto& s : f) ++n[s.edge];
  return n;
}

long double_weight(const Instance& in, const std::vector<long>& n, const std::vector<long>& f) {
  long total = 0;
  for (std::size_t e = 0; e < n.size(); ++e) {
    const auto& ed = in.complex.edges()[e];
    total += (n[e] - 2) * std::labs(in.k0[e] + f[ed.target] - f[ed.source]);
  }
  return total;
}

// 2 * weight is a sum of convex functions of differences f(t) - f(s), hence
// L-natural convex: a potential that no move f +- 1_S improves is a global
// minimum. Steepest descent over all vertex subsets S.
long descent_double_norm(const Instance& in) {
  const auto n = multiplicities(in.complex);
  const std::size_t nv = in.complex.num_vertices();
  std::vector<long> f(nv, 0);
  long best = double_weight(in, n, f);
  for (;;) {
    long step_best = best;
    std::vector<long> step_f;
    for (unsigned mask = 1; mask < (1u << nv); ++mask)
      for (long sign : {1L, -1L}) {
        auto g = f;
        for (std::size_t v = 0; v < nv; ++v)
          if (mask >> v & 1) g[v] += sign;
        const long w = double_weight(in, n, g);
        if (w < step_best) {
          step_best = w;
          step_f = g;
        }
      }
    if (step_f.empty()) return best;
    best = step_best;
    f = step_f;
  }
}

// Exhaustive minimum over potentials with f(0) = 0. Shifting the part of f
// above a gap wider than K = max |k0| never increases the weight, so
// |f(v)| <= (V - 1) K suffices.
long exhaustive_double_norm(const Instance& in) {
  const auto n = multiplicities(in.complex);
  const std::size_t nv = in.complex.num_vertices();
  long kmax = 0;
  for (long v : in.k0) kmax = std::max(kmax, std::labs(v));
  const long range = static_cast<long>(nv - 1) * kmax;
  std::vector<long> f(nv, 0);
  long best = double_weight(in, n, f);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    if (v == nv) {
      best = std::min(best, double_weight(in, n, f));
      return;
    }
    for (long val = -range; val <= range; ++val) {
      f[v] = val;
      go(v + 1);
    }
  };
  go(1);
  return best;
}

Cochain1 to_cochain(const std::vector<long>& k) {
  std::vector<Rational> v;
  for (long x : k) v.emplace_back(x);
  return Cochain1(v);
}

}  // namespace

TEST(LinearProgram, SmallExamples) {
  // min x + y s.t. x + 2y = 4, x, y >= 0.
  LinearProgram lp{Matrix<Rational>(1, 2, 0), {4}, {1, 1}};
  lp.a(0, 0) = 1;
  lp.a(0, 1) = 2;
  auto s = solve_lp(lp);
  ASSERT_EQ(s.status, LpSolution::Status::Optimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(s.x, (std::vector<Rational>{0, 2}));

  // Fractional optimum: 3x = 1.
  LinearProgram frac{Matrix<Rational>(1, 1, 3), {1}, {1}};
  EXPECT_EQ(solve_lp(frac).objective, make_rational(1, 3));

  LinearProgram infeasible{Matrix<Rational>(1, 1, 1), {-1}, {1}};
  EXPECT_EQ(solve_lp(infeasible).status, LpSolution::Status::Infeasible);

  LinearProgram unbounded{Matrix<Rational>(1, 2, 0), {0}, {-1, 0}};
  unbounded.a(0, 0) = 1;
  unbounded.a(0, 1) = -1;
  EXPECT_EQ(solve_lp(unbounded).status, LpSolution::Status::Unbounded);
}

TEST(TuraevNorm, TorusIsZero) {
  const auto x = parse_complex("vertices: 1\nedge 0: 0 0 a\nedge 1: 0 0 x\nface: +1 +0 -1 -0\n");
  EXPECT_EQ(turaev_norm(x, CohomClass::parse("x=1")).value, 0);
  EXPECT_EQ(turaev_norm(x, CohomClass::parse("a=5,x=-2")).value, 0);
}

TEST(TuraevNorm, OneVertexEqualsPresentationComplexity) {
  const auto p = parse_presentation("gens: x1 x2 x3 ; rels: x3 x1 x3^-1 x2^-1 , x1 x2 x1^-1 x3^-1 , x2 x3 x2^-1 x1^-1");
  const auto phi = CohomClass::parse("x1=1,x2=1,x3=1");
  const auto x = complex_from_presentation(p);
  for (auto m : {NormMethod::LP, NormMethod::Brute, NormMethod::Auto}) {
    const auto r = turaev_norm(x, phi, m);
    EXPECT_EQ(r.value, presentation_complexity(p, phi));
    EXPECT_EQ(r.value, 3);
    EXPECT_TRUE(r.internal_error.empty());
  }
}

TEST(TuraevNorm, Errors) {
  const auto open = parse_complex("vertices: 1\nedge 0: 0 0\nedge 1: 0 0\nface: +0 +1 -0\n");
  EXPECT_THROW(turaev_norm(open, Cochain1({0, 0})), PreconditionError);
  const auto x = parse_complex("vertices: 1\nedge 0: 0 0 a\nedge 1: 0 0 x\nface: +1 +0 -1 -0\n");
  EXPECT_THROW(turaev_norm(x, Cochain1({1})), PreconditionError);
  EXPECT_THROW(parse_norm_method("simplex"), ParseError);
  EXPECT_EQ(parse_norm_method("lp"), NormMethod::LP);
}

TEST(TuraevNorm, AgreesWithIndependentOracles) {
  std::mt19937 rng(2024);
  int nontrivial = 0, brute_checked = 0;
  for (int it = 0; it < 250; ++it) {
    const Instance in = random_instance(rng);
    const Cochain1 k0 = to_cochain(in.k0);
    ASSERT_TRUE(is_cocycle(in.complex, k0));
    const long twice = descent_double_norm(in);
    if (in.complex.num_vertices() <= 4) EXPECT_EQ(exhaustive_double_norm(in), twice);
    const Rational oracle = make_rational(twice, 2);
    const auto lp = turaev_norm(in.complex, k0, NormMethod::LP);
    EXPECT_EQ(lp.value, oracle) << in.complex.serialize();
    EXPECT_TRUE(lp.internal_error.empty());
    EXPECT_EQ(weight(in.complex, lp.optimal_cochain), lp.value);
    EXPECT_TRUE(lp.optimal_cochain.is_integral());
    EXPECT_TRUE(is_cocycle(in.complex, lp.optimal_cochain));
    Integer box = 1;
    for (std::size_t v = 1; v < in.complex.num_vertices(); ++v) box *= 2 * brute_force_bound(in.complex, k0) + 1;
    if (box <= 2000) {
      EXPECT_EQ(turaev_norm(in.complex, k0, NormMethod::Brute).value, oracle);
      ++brute_checked;
    }
    if (oracle < weight(in.complex, k0)) ++nontrivial;
  }
  EXPECT_GT(nontrivial, 20);
  EXPECT_GT(brute_checked, 50);
}

TEST(TuraevNorm, HomogeneousAndInvariant) {
  std::mt19937 rng(99);
  for (int it = 0; it < 100; ++it) {
    const Instance in = random_instance(rng);
    const auto& x = in.complex;
    const Cochain1 k0 = to_cochain(in.k0);
    const Rational t = turaev_norm(x, k0, NormMethod::LP).value;
    for (const Rational c : {make_rational(2), make_rational(-3), make_rational(1, 2), make_rational(0)})
      EXPECT_EQ(turaev_norm(x, k0.scaled(c), NormMethod::LP).value, abs(c) * t);
    std::vector<Rational> g(x.num_vertices());
    for (auto& v : g) v = static_cast<long>(rng() % 7) - 3;
    EXPECT_EQ(turaev_norm(x, k0 + coboundary(x, g), NormMethod::LP).value, t);
    EXPECT_LE(t, weight(x, k0));
  }
}
