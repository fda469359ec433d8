#pragma once

#include <utility>
#include <vector>

#include "turaev/abelian.hpp"

namespace turaev {

/// Largest k with v = k w for an integral w: the gcd of the entries.
/// Throws PreconditionError for the zero vector.
Integer divisibility(const std::vector<Integer>& coords);

/// Divisibility of an integral class, computed on its coordinates in
/// Hom(H_1/torsion, Z).
Integer divisibility(const Presentation& p, const CohomClass& phi);

/// For primitive psi = (x, y) with y != 0, returns alpha = (1, 0) and
/// beta = (p x + p - 1, p y) where p is the smallest prime > 1 + |y|.
/// Then div(alpha) + div(beta) < div(alpha + beta).
std::pair<std::vector<Integer>, std::vector<Integer>> div_counterexample(const Integer& x,
                                                                         const Integer& y);

/// Smallest prime strictly greater than n.
Integer next_prime_above(const Integer& n);

}  // namespace turaev
