#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "turaev/laurent.hpp"
#include "turaev/presentation.hpp"

namespace turaev::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 0x7572617665ULL;

/// A good presentation with at most 4 generators, at most 4 relators of
/// length at most 8 (before make_good), and a nonzero integral class with
/// values in [-2, 2].
struct RandomInstance {
  Presentation presentation;
  CohomClass phi;
};
RandomInstance random_good_presentation(Rng& rng);

/// Random Laurent polynomial in `nvars` variables with 1..6 terms.
LaurentPoly random_laurent(Rng& rng, std::size_t nvars);

CriterionResult wirtinger_crossing_count();
CriterionResult trefoil_certification();
CriterionResult wedge_of_tori();
CriterionResult alexander_polynomials();
CriterionResult optimizer_oracle(std::uint64_t seed = kDefaultSeed);
CriterionResult cover_inequality(std::uint64_t seed = kDefaultSeed);
CriterionResult fox_identity(std::uint64_t seed = kDefaultSeed);
CriterionResult divisibility_counterexample(std::uint64_t seed = kDefaultSeed);
CriterionResult seminorm_properties(std::uint64_t seed = kDefaultSeed);
CriterionResult hypothesis_gating(std::uint64_t seed = kDefaultSeed);

/// Criteria 1-10 in order.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

}  // namespace turaev::suite
