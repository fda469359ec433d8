#include <gtest/gtest.h>

#include "suite.hpp"
#include "turaev/alexander.hpp"
#include "turaev/link.hpp"
#include "turaev/twisted_homology.hpp"

using namespace turaev;

namespace {

Rational evaluate(const QLaurent& f, const Rational& t) {
  Rational total = 0, power = 1;
  const long low = f.low();
  for (long i = 0; i < std::labs(low); ++i) power = low < 0 ? Rational(power / t) : Rational(power * t);
  for (const auto& c : f.coeffs()) {
    total += c * power;
    power *= t;
  }
  return total;
}

std::size_t rank_at(const QtMatrix& m, const Rational& t) {
  Matrix<Rational> a(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = evaluate(m(i, j), t);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, rank);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(rank, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

QLaurent product(const std::vector<QLaurent>& fs) {
  QLaurent out(Rational(1));
  for (const auto& f : fs) out = out * f;
  return out;
}

}  // namespace

TEST(TwistedHomology, Knots) {
  const auto w = wirtinger(parse_pd(*pd_fixture("trefoil")));
  const auto h = h1_qt(w.presentation, w.total_meridian_class());
  EXPECT_EQ(h.free_rank, 0u);
  ASSERT_EQ(h.invariant_factors.size(), 1u);
  EXPECT_EQ(h.to_string(), "H1 = Q[t±]/(1 - t + t^2)");
  EXPECT_EQ(min_generators_torsion(h), 1u);

  const auto f8 = wirtinger(parse_pd(*pd_fixture("fig8")));
  EXPECT_EQ(h1_qt(f8.presentation, f8.total_meridian_class()).to_string(), "H1 = Q[t±]/(1 - 3*t + t^2)");
}

TEST(TwistedHomology, WedgeOfTori) {
  for (int n = 1; n <= 4; ++n) {
    std::string gens, rels;
    CohomClass phi;
    for (int i = 1; i <= n; ++i) {
      const auto s = std::to_string(i);
      gens += " a" + s + " x" + s;
      rels += std::string(i > 1 ? " ," : "") + " [x" + s + ",a" + s + "]";
      phi.set("x" + s, 1);
    }
    const auto h = h1_qt(parse_presentation("gens:" + gens + " ; rels:" + rels), phi);
    EXPECT_EQ(h.free_rank, static_cast<std::size_t>(n - 1));
    EXPECT_EQ(h.invariant_factors, std::vector<QLaurent>(n, QLaurent(0, {-1, 1})));
    EXPECT_EQ(min_generators_torsion(h), static_cast<std::size_t>(n));
  }
}

TEST(TwistedHomology, TrivialModule) {
  const auto h = h1_qt(parse_presentation("gens: a b ; rels: a b^-1"), CohomClass::parse("a=1,b=1"));
  EXPECT_EQ(h.to_string(), "H1 = 0");
  EXPECT_EQ(min_generators_torsion(h), 0u);
}

TEST(TwistedHomology, ChainComplexAndRankNullity) {
  suite::Rng rng(53);
  const std::vector<Rational> points{make_rational(7, 3), make_rational(-5, 2), Rational(11)};
  int torsion_only = 0;
  for (int it = 0; it < 120; ++it) {
    const auto inst = suite::random_good_presentation(rng);
    const auto& p = inst.presentation;
    const auto c = fox_chain_complex(p, inst.phi);
    const auto h = h1_qt(p, inst.phi);
    for (const auto& t : points) {
      bool root = false;
      for (const auto& f : h.invariant_factors) root = root || evaluate(f, t) == 0;
      if (root) continue;
      EXPECT_EQ(h.free_rank, p.num_generators() - rank_at(c.d1, t) - rank_at(c.d2, t)) << p.to_string();
    }
    for (std::size_t i = 1; i < h.invariant_factors.size(); ++i) {
      QLaurent q, r;
      QLaurentDomain::divmod(h.invariant_factors[i], h.invariant_factors[i - 1], q, r);
      EXPECT_TRUE(r.is_zero());
    }
    const auto delta = QLaurent::from(alexander_polynomial(p, inst.phi));
    EXPECT_EQ(h.free_rank == 0, !delta.is_zero()) << p.to_string();
    if (h.free_rank == 0) {
      ++torsion_only;
      EXPECT_EQ(product(h.invariant_factors).normalized(), delta.normalized()) << p.to_string();
    }
  }
  EXPECT_GT(torsion_only, 10);
}
