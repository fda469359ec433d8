#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "turaev/abelian.hpp"
#include "turaev/alexander.hpp"
#include "turaev/link.hpp"

using namespace turaev;

namespace {

LaurentPoly uni(std::vector<std::pair<long, long>> terms) { return LaurentPoly::univariate(terms); }

FreeWord parse_word(const Presentation& p, const std::string& w) {
  return parse_presentation("gens:" + [&] {
           std::string g;
           for (const auto& n : p.generators()) g += " " + n;
           return g;
         }() + " ; rels: " + w)
      .relators()[0];
}

// Determinant by the Leibniz formula.
LaurentPoly leibniz(const LaurentMatrix& a, std::size_t nvars) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly total(nvars);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    LaurentPoly term = LaurentPoly::constant(nvars, sign);
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// gcd of every (m-1)-minor, enumerated directly.
LaurentPoly minor_gcd_oracle(const LaurentMatrix& a, std::size_t nvars) {
  const std::size_t n = a.rows(), m = a.cols();
  if (m == 1) return LaurentPoly::constant(nvars, 1);
  std::vector<LaurentPoly> minors;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m - 1) continue;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(i);
    for (std::size_t del = 0; del < m; ++del) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < m; ++j)
        if (j != del) cols.push_back(j);
      minors.push_back(leibniz(a.select(rows, cols), nvars));
    }
  }
  return laurent_gcd(minors);
}

// (t^pq - 1)(t - 1) = Delta (t^p - 1)(t^q - 1) for the (p, q) torus knot.
void expect_torus_knot(long p, long q) {
  const auto pres = parse_presentation("gens: a b ; rels: a^" + std::to_string(p) + " b^-" + std::to_string(q));
  const auto d = alexander_polynomial(pres);
  auto tm1 = [](long k) { return uni({{0, -1}, {k, 1}}); };
  EXPECT_TRUE((d * tm1(p) * tm1(q)).equals_up_to_unit(tm1(p * q) * tm1(1))) << p << "," << q;
}

}  // namespace

TEST(Fox, DerivativeExamples) {
  const auto p = parse_presentation("gens: a x ; rels: [x,a]");
  const FreeWord& r = p.relators()[0];
  const auto dx = fox_derivative(r, 1);
  const auto da = fox_derivative(r, 0);
  EXPECT_EQ(dx, (GroupRingElement{{FreeWord(), 1}, {parse_word(p, "x a x^-1"), -1}}));
  EXPECT_EQ(da, (GroupRingElement{{parse_word(p, "x"), 1}, {parse_word(p, "x a x^-1 a^-1"), -1}}));
  // d(x^-1)/dx = -x^-1; d(x^3)/dx = 1 + x + x^2.
  EXPECT_EQ(fox_derivative(parse_word(p, "x^-1"), 1), (GroupRingElement{{parse_word(p, "x^-1"), -1}}));
  EXPECT_EQ(fox_derivative(parse_word(p, "x^3"), 1),
            (GroupRingElement{{FreeWord(), 1}, {parse_word(p, "x"), 1}, {parse_word(p, "x^2"), 1}}));
  EXPECT_TRUE(fox_derivative(parse_word(p, "a"), 1).empty());
  EXPECT_EQ(format_group_ring(p, fox_derivative(parse_word(p, "x"), 1)), "1");
}

TEST(Fox, FundamentalIdentityOnRandomWords) {
  std::mt19937 rng(31);
  for (int it = 0; it < 300; ++it) {
    std::vector<Letter> letters;
    const std::size_t len = rng() % 14;
    for (std::size_t i = 0; i < len; ++i) letters.push_back({rng() % 3, rng() % 2 ? 1 : -1});
    EXPECT_TRUE(fox_identity_holds(FreeWord(letters).reduced(), 3));
  }
}

TEST(Alexander, KnotExamples) {
  for (const auto& [name, expected] : std::vector<std::pair<std::string, LaurentPoly>>{
           {"trefoil", uni({{0, 1}, {1, -1}, {2, 1}})}, {"fig8", uni({{0, 1}, {1, -3}, {2, 1}})}}) {
    const auto w = wirtinger(parse_pd(*pd_fixture(name)));
    EXPECT_EQ(alexander_polynomial(w.presentation), expected) << name;
    EXPECT_EQ(alexander_polynomial(w.presentation, w.total_meridian_class()), expected) << name;
  }
  const auto two = parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
  EXPECT_EQ(alexander_polynomial(two).to_string(), "1 - t + t^2");
}

TEST(Alexander, TorusKnotFormula) {
  expect_torus_knot(2, 3);
  expect_torus_knot(2, 5);
  expect_torus_knot(3, 4);
  expect_torus_knot(3, 5);
}

TEST(Alexander, WhiteheadLink) {
  const auto w = wirtinger(parse_pd(*pd_fixture("whitehead")));
  EXPECT_EQ(alexander_polynomial(w.presentation).to_string(), "1 - s - u + s*u");
}

TEST(Alexander, WedgeOfTori) {
  EXPECT_EQ(alexander_polynomial(parse_presentation("gens: a x ; rels: [x,a]")), LaurentPoly::constant(2, 1));
  const auto w2 = parse_presentation("gens: a1 x1 a2 x2 ; rels: [x1,a1] , [x2,a2]");
  EXPECT_TRUE(alexander_polynomial(w2).is_zero());
  EXPECT_TRUE(alexander_polynomial(w2, CohomClass::parse("x1=1,x2=1")).is_zero());
}

TEST(Alexander, Errors) {
  EXPECT_THROW(alexander_polynomial(parse_presentation("gens: a ; rels: a^3")), PreconditionError);
  const auto two = parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1");
  EXPECT_THROW(alexander_polynomial(two, CohomClass::parse("u=0,v=0")), PreconditionError);
  EXPECT_THROW(alexander_polynomial(two, CohomClass::parse("u=1,v=2")), PreconditionError);
}

TEST(Alexander, MinorsMatchLeibnizOracle) {
  std::vector<Presentation> cases;
  for (const auto& name : pd_fixture_names()) cases.push_back(wirtinger(parse_pd(*pd_fixture(name))).presentation);
  cases.push_back(parse_presentation("gens: u v ; rels: u v u v^-1 u^-1 v^-1"));
  cases.push_back(parse_presentation("gens: a b c ; rels: a b a^-1 c^-1 , b c b^-1 a^-1"));
  cases.push_back(parse_presentation("gens: a x b ; rels: [x,a] , [x,b] , a b a^-1 b^-1"));
  for (const auto& p : cases) {
    const auto psi = free_abelianization(p);
    const auto a = alexander_matrix(p, psi);
    const auto minors = codimension_one_minors(a, psi.rank());
    for (const auto& mi : minors) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (j != mi.deleted_column) cols.push_back(j);
      EXPECT_EQ(mi.value, leibniz(a.select(mi.rows, cols), psi.rank()));
    }
    EXPECT_EQ(alexander_polynomial(p, psi), minor_gcd_oracle(a, psi.rank()).canonical()) << p.to_string();
  }
}

TEST(Alexander, InvariantUnderReorderingAndReduction) {
  const auto w = wirtinger(parse_pd(*pd_fixture("fig8"))).presentation;
  const auto base = alexander_polynomial(w);
  std::mt19937 rng(37);
  for (int it = 0; it < 10; ++it) {
    auto rels = w.relators();
    std::shuffle(rels.begin(), rels.end(), rng);
    // Cyclic conjugation by a generator, unreduced.
    rels[0] = (FreeWord(std::vector<Letter>{{0, 1}}) * rels[0]) * FreeWord(std::vector<Letter>{{0, -1}});
    EXPECT_EQ(alexander_polynomial(Presentation(w.generators(), rels)), base);

    std::vector<std::size_t> perm(w.num_generators());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> gens(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) gens[perm[i]] = w.generators()[i];
    std::vector<FreeWord> renamed;
    for (const auto& r : w.relators()) {
      std::vector<Letter> ls;
      for (const auto& l : r.letters()) ls.push_back({perm[l.gen], l.exp});
      renamed.push_back(FreeWord(ls));
    }
    EXPECT_EQ(alexander_polynomial(Presentation(gens, renamed)), base);
  }
}

TEST(Alexander, KnotsAreSymmetric) {
  for (const auto& name : {"trefoil", "fig8"}) {
    const auto d = alexander_polynomial(wirtinger(parse_pd(*pd_fixture(name))).presentation);
    EXPECT_TRUE(d.specialize({-1}).equals_up_to_unit(d)) << name;
    EXPECT_TRUE(d.specialize({0}).is_unit()) << name;
  }
}
