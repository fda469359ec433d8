#include <gtest/gtest.h>

#include <random>

#include "turaev/covers.hpp"
#include "turaev/link.hpp"

using namespace turaev;

namespace {

const char* kTrefoil2 = "gens: u v ; rels: u v u v^-1 u^-1 v^-1";

}  // namespace

TEST(Covers, TrefoilTwoFold) {
  const auto p = parse_presentation(kTrefoil2);
  const auto spec = CoverSpec::cyclic(p, CohomClass::parse("u=1,v=1"), 2);
  const auto x = cover_complex(p, spec);
  EXPECT_EQ(x.num_vertices(), 2u);
  EXPECT_EQ(x.num_edges(), 4u);
  EXPECT_EQ(x.num_faces(), 2u);
  EXPECT_EQ(x.edges()[0].name, "u.0");
  EXPECT_EQ(x.edges()[0].source, 0u);
  EXPECT_EQ(x.edges()[0].target, 1u);
  EXPECT_EQ(h1_structure(x), (AbelianGroup{1, {3}}));
}

TEST(Covers, LiftedMeridianLoop) {
  const auto w = wirtinger(parse_pd(*pd_fixture("trefoil")));
  const auto& p = w.presentation;
  const auto phi = w.total_meridian_class();
  const auto spec = CoverSpec::cyclic(p, phi, 3);
  const FreeWord cube(std::vector<Letter>{{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(spec.act(cube, 0), 0u);
  EXPECT_EQ(spec.act(FreeWord(std::vector<Letter>{{0, 1}}), 0), 1u);
  const auto x = cover_complex(p, spec);
  const auto lifted = cochain_from_values(x, lift_class(p, spec, phi));
  Rational total = 0;
  std::size_t sheet = 0;
  for (int i = 0; i < 3; ++i) {
    const auto e = x.find_edge(p.generators()[0] + "." + std::to_string(sheet));
    ASSERT_TRUE(e);
    EXPECT_EQ(x.edges()[*e].source, sheet);
    total += lifted[*e];
    sheet = x.edges()[*e].target;
  }
  EXPECT_EQ(sheet, 0u);
  EXPECT_EQ(total, 3);
}

TEST(Covers, StructuralInvariants) {
  std::vector<std::pair<Presentation, CohomClass>> cases;
  cases.push_back({parse_presentation(kTrefoil2), CohomClass::parse("u=1,v=1")});
  cases.push_back({parse_presentation("gens: a x ; rels: [x,a]"), CohomClass::parse("a=1,x=2")});
  for (const auto& name : pd_fixture_names()) {
    const auto w = wirtinger(parse_pd(*pd_fixture(name)));
    cases.push_back({w.presentation, w.total_meridian_class()});
  }
  for (const auto& [p, phi] : cases) {
    const auto base = complex_from_presentation(p);
    const auto nb = base.edge_multiplicities();
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto spec = CoverSpec::cyclic(p, phi, n);
      spec.validate(p);
      const auto x = cover_complex(p, spec);
      EXPECT_EQ(x.euler_characteristic(), static_cast<long>(n) * base.euler_characteristic());
      const auto nx = x.edge_multiplicities();
      for (std::size_t g = 0; g < p.num_generators(); ++g)
        for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(nx[g * n + s], nb[g]);
      EXPECT_GE(h1_structure(x).betti, h1_structure(base).betti);
      const auto ineq = verify_cover_inequality(p, spec, phi);
      EXPECT_TRUE(ineq.holds);
      EXPECT_EQ(ineq.rhs, Rational(static_cast<long>(n)) * ineq.base_norm.value);
    }
  }
}

TEST(Covers, InequalityOnTrefoilWirtinger) {
  const auto w = wirtinger(parse_pd(*pd_fixture("trefoil")));
  const auto r = verify_cover_inequality(w.presentation, CoverSpec::cyclic(w.presentation, w.total_meridian_class(), 2),
                                         w.total_meridian_class());
  EXPECT_EQ(r.lhs, 6);
  EXPECT_EQ(r.rhs, 6);
  EXPECT_TRUE(r.holds);
}

TEST(Covers, NonCyclicAction) {
  // S3 action of the trefoil group: u -> (0 1), v -> (1 2).
  const auto p = parse_presentation(kTrefoil2);
  const CoverSpec spec(3, {{1, 0, 2}, {0, 2, 1}});
  spec.validate(p);
  const auto x = cover_complex(p, spec);
  EXPECT_EQ(x.euler_characteristic(), 3 * complex_from_presentation(p).euler_characteristic());
  EXPECT_TRUE(verify_cover_inequality(p, spec, CohomClass::parse("u=1,v=1")).holds);
}

TEST(Covers, Errors) {
  const auto p = parse_presentation(kTrefoil2);
  EXPECT_THROW(CoverSpec::cyclic(p, CohomClass::parse("u=2,v=2"), 2), PreconditionError);
  EXPECT_THROW(CoverSpec::cyclic(p, CohomClass::parse("u=1/2,v=1/2"), 2), PreconditionError);
  EXPECT_THROW(CoverSpec(2, {{0, 0}, {0, 1}}), PreconditionError);
  // Relator does not act trivially.
  EXPECT_THROW(CoverSpec(2, {{1, 0}, {0, 1}}).validate(p), PreconditionError);
  // Not transitive.
  EXPECT_THROW(CoverSpec(2, {{0, 1}, {0, 1}}).validate(p), PreconditionError);
}
