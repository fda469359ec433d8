#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turaev/laurent.hpp"
#include "turaev/presentation.hpp"

namespace turaev {

/// Exponent vectors with nonzero coefficient, in increasing order.
std::vector<Exponent> support(const LaurentPoly& delta);

/// max over support pairs of phi(h) - phi(g); 0 for the zero polynomial.
Rational alexander_norm(const LaurentPoly& delta, const std::vector<Rational>& phi);

/// Vertices of the Newton polytope (support points that are not convex
/// combinations of the others). Rank at most 3.
std::vector<Exponent> newton_polytope_vertices(const LaurentPoly& delta);

/// Lower bounds for the complexity function with the data used to decide
/// whether each applies.
struct LowerBounds {
  std::size_t b1 = 0;
  LaurentPoly delta;      // multivariable, over H_1/torsion (rank b1)
  std::vector<Rational> phi_coords;
  std::optional<LaurentPoly> delta_phi;  // one-variable, when phi is integral and nonzero
  std::optional<Integer> divisibility;

  /// a(phi); only when b1 >= 2 and delta != 0.
  std::optional<Rational> a_bound;
  /// deg(delta_phi) - 1; only when delta_phi != 0 and phi is primitive.
  std::optional<Rational> deg_bound;
  /// One line per gating decision.
  std::vector<std::string> notes;
};

LowerBounds lower_bounds(const Presentation& p, const CohomClass& phi);

}  // namespace turaev
