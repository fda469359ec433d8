#include <gtest/gtest.h>

#include <random>

#include "turaev/laurent.hpp"
#include "turaev/qlaurent.hpp"

using namespace turaev;

namespace {

LaurentPoly uni(std::vector<std::pair<long, long>> terms) { return LaurentPoly::univariate(terms); }

LaurentPoly random_poly(std::mt19937& rng, std::size_t nvars, int terms, long emax) {
  LaurentPoly p(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponent e(nvars);
    for (auto& x : e) x = static_cast<long>(rng() % (2 * emax + 1)) - emax;
    p.add_term(e, static_cast<long>(rng() % 7) - 3);
  }
  return p;
}

}  // namespace

TEST(Laurent, ArithmeticAndFormatting) {
  const auto a = uni({{0, 1}, {1, -1}, {2, 1}});
  EXPECT_EQ(a.to_string(), "1 - t + t^2");
  EXPECT_EQ((a * uni({{0, 1}, {1, 1}})).to_string(), "1 + t^3");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ(uni({{-1, 2}, {0, -1}}).to_string(), "2*t^-1 - 1");
  EXPECT_EQ(LaurentPoly::variable_minus_one(2, 1).to_string(), "-1 + u");
  LaurentPoly w(2);
  w.add_term({0, 0}, 1);
  w.add_term({1, 0}, -1);
  w.add_term({0, 1}, -1);
  w.add_term({1, 1}, 1);
  EXPECT_EQ(w.to_string(), "1 - s - u + s*u");
  EXPECT_EQ(w, LaurentPoly::variable_minus_one(2, 0) * LaurentPoly::variable_minus_one(2, 1));
  EXPECT_EQ(default_variable_names(3), (std::vector<std::string>{"t1", "t2", "t3"}));
}

TEST(Laurent, CanonicalForm) {
  const auto a = uni({{3, -1}, {4, 1}, {5, -1}});
  EXPECT_EQ(a.canonical(), uni({{0, 1}, {1, -1}, {2, 1}}));
  EXPECT_TRUE(a.equals_up_to_unit(uni({{-7, 1}, {-6, -1}, {-5, 1}})));
  EXPECT_FALSE(a.equals_up_to_unit(uni({{0, 1}, {1, 1}, {2, 1}})));
  EXPECT_TRUE(LaurentPoly::monomial({4}, -1).is_unit());
  EXPECT_FALSE(LaurentPoly::monomial({4}, 2).is_unit());
  EXPECT_EQ(LaurentPoly(1).canonical(), LaurentPoly(1));
}

TEST(Laurent, SpecializeAndDegree) {
  LaurentPoly w = LaurentPoly::variable_minus_one(2, 0) * LaurentPoly::variable_minus_one(2, 1);
  EXPECT_EQ(w.specialize({1, 1}), uni({{0, 1}, {1, -2}, {2, 1}}));
  EXPECT_EQ(w.specialize({1, -1}).canonical(), uni({{0, 1}, {1, -2}, {2, 1}}));
  EXPECT_TRUE(w.specialize({0, 1}).is_zero());
  EXPECT_EQ(degree(uni({{-2, 1}, {3, 4}})), 5);
  EXPECT_EQ(degree(uni({{0, 7}})), 0);
  EXPECT_THROW(degree(LaurentPoly(1)), PreconditionError);
  EXPECT_THROW(degree(w), PreconditionError);
}

TEST(Laurent, ExactDivision) {
  const auto a = uni({{0, 1}, {3, 1}});
  const auto b = uni({{0, 1}, {1, 1}});
  EXPECT_EQ(exact_divide(a, b), uni({{0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(exact_divide(a, uni({{0, 1}, {1, -1}})), std::nullopt);
  EXPECT_EQ(exact_divide(uni({{0, 2}}), uni({{0, 4}})), std::nullopt);
}

TEST(Laurent, GcdExamples) {
  const auto x1 = uni({{0, -1}, {1, 1}});
  const auto tref = uni({{0, 1}, {1, -1}, {2, 1}});
  EXPECT_EQ(laurent_gcd(x1 * tref, x1 * x1), x1.canonical());
  EXPECT_EQ(laurent_gcd(uni({{0, 2}}), uni({{0, 3}})), uni({{0, 1}}));
  EXPECT_EQ(laurent_gcd(uni({{0, 4}, {1, 6}}), uni({{0, 6}})), uni({{0, 2}}));
  EXPECT_EQ(laurent_gcd(LaurentPoly(1), LaurentPoly(1)), LaurentPoly(1));
  EXPECT_EQ(laurent_gcd(LaurentPoly(1), tref.shifted({5})), tref);
  EXPECT_EQ(laurent_gcd(std::vector<LaurentPoly>{x1 * tref, x1 * x1 * tref, tref * tref}), tref);
  const auto s1 = LaurentPoly::variable_minus_one(2, 0), u1 = LaurentPoly::variable_minus_one(2, 1);
  EXPECT_EQ(laurent_gcd(s1 * u1, s1 * s1), s1);
  EXPECT_EQ(laurent_gcd(s1, u1), LaurentPoly::constant(2, 1));
}

TEST(Laurent, GcdOfCommonMultiple) {
  std::mt19937 rng(17);
  for (int it = 0; it < 150; ++it) {
    const std::size_t nv = 1 + rng() % 3;
    const auto a = random_poly(rng, nv, 1 + rng() % 4, 2);
    const auto b = random_poly(rng, nv, 1 + rng() % 4, 2);
    const auto c = random_poly(rng, nv, 1 + rng() % 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const auto g = laurent_gcd(a * c, b * c);
    EXPECT_TRUE(g.equals_up_to_unit(laurent_gcd(a, b) * c))
        << a.to_string() << " | " << b.to_string() << " | " << c.to_string();
    EXPECT_TRUE(exact_divide(a * c, g).has_value());
    EXPECT_TRUE(exact_divide(b * c, g).has_value());
  }
}

TEST(Laurent, UnivariateGcdMatchesRationalEuclid) {
  std::mt19937 rng(23);
  for (int it = 0; it < 200; ++it) {
    const auto c = random_poly(rng, 1, 1 + rng() % 3, 2);
    const auto a = random_poly(rng, 1, 1 + rng() % 4, 3) * c;
    const auto b = random_poly(rng, 1, 1 + rng() % 4, 3) * c;
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = laurent_gcd(a, b);
    EXPECT_EQ(QLaurent::from(g).normalized(), q_gcd(QLaurent::from(a), QLaurent::from(b)));
  }
}

TEST(QLaurent, ArithmeticAndFormatting) {
  const QLaurent a(0, {-1, 1});
  EXPECT_EQ(a.to_string(), "-1 + t");
  EXPECT_EQ((a * a).to_string(), "1 - 2*t + t^2");
  EXPECT_EQ(QLaurent(2, {make_rational(1, 2), 0, 3}).to_string("x"), "1/2*x^2 + 3*x^4");
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ(QLaurent(-3, {2, 4}).normalized(), QLaurent(0, {make_rational(1, 2), 1}));
  EXPECT_EQ(QLaurent(-3, {2, 4}).span(), 1);
  EXPECT_TRUE(QLaurent::monomial(-5, 3).is_unit());
}

TEST(QLaurent, EuclideanDivision) {
  std::mt19937 rng(29);
  for (int it = 0; it < 200; ++it) {
    const auto a = QLaurent::from(random_poly(rng, 1, 1 + rng() % 5, 4));
    const auto b = QLaurent::from(random_poly(rng, 1, 1 + rng() % 3, 2));
    if (b.is_zero()) continue;
    QLaurent q, r;
    QLaurentDomain::divmod(a, b, q, r);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.is_zero() || r.span() < b.span());
  }
}
