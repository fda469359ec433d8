#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turaev/alexander_norm.hpp"
#include "turaev/presentation.hpp"

namespace turaev {

/// A hypothesis or consistency check recorded in a report. Required checks
/// decide the outcome; the others document which bounds were gated off.
struct Check {
  std::string name;
  bool passed = false;
  bool required = true;
  std::string detail;
};

struct Sandwich {
  Rational lower = 0;
  Rational upper = 0;
  bool certified = false;

  LowerBounds bounds;                 // computed on the first presentation
  std::vector<Rational> upper_terms;  // t_P(make_good(P_i), phi_i)
  std::vector<Check> checks;
};

struct ClassedPresentation {
  Presentation presentation;
  CohomClass phi;
};

/// Two-sided bounds for the complexity function of the common group:
/// lower = max(a-bound, degree bound, 0), upper = min_i t_P(make_good(P_i)).
/// Throws PreconditionError if the abelianizations differ.
Sandwich certify_tbar(const std::vector<ClassedPresentation>& inputs);

}  // namespace turaev
