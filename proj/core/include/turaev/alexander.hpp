#pragma once

#include <map>
#include <string>
#include <vector>

#include "turaev/abelian.hpp"
#include "turaev/laurent.hpp"
#include "turaev/matrix.hpp"
#include "turaev/presentation.hpp"

namespace turaev {

/// An element of the integral group ring of the free group: reduced words
/// with nonzero integer coefficients.
using GroupRingElement = std::map<FreeWord, Integer>;

/// Free derivative d w / d x_gen.
GroupRingElement fox_derivative(const FreeWord& w, std::size_t gen);

/// e.g. "1 - x a x^-1"; the empty word prints as 1.
std::string format_group_ring(const Presentation& p, const GroupRingElement& e);

/// sum_i (dr/dx_i)(x_i - 1) == r - 1 in the free group ring.
bool fox_identity_holds(const FreeWord& r, std::size_t num_generators);

/// Image under psi: each word w maps to t^{psi(w)}.
LaurentPoly push_forward(const GroupRingElement& e, const AbelianizationMap& psi);

using LaurentMatrix = Matrix<LaurentPoly>;

/// Fox matrix: entry (j, i) = psi(d r_j / d x_i). Checks that psi kills every
/// relator and that sum_i A(j,i)(psi(x_i) - 1) = 0 for every row.
LaurentMatrix alexander_matrix(const Presentation& p, const AbelianizationMap& psi);

/// A (size x size)-minor: chosen rows, one deleted column.
struct Minor {
  std::vector<std::size_t> rows;
  std::size_t deleted_column = 0;
  LaurentPoly value;
};

/// All minors of an n x m matrix of order m - 1 (rows ascending, a single
/// column deleted). Uses a subset Laplace expansion per row choice.
std::vector<Minor> codimension_one_minors(const LaurentMatrix& a, std::size_t nvars);

/// gcd of all (m-1)-minors of the Fox matrix (first elementary ideal).
/// 1 when m = 1; 0 when there are fewer than m - 1 relators. psi must have
/// rank >= 1.
LaurentPoly alexander_polynomial(const Presentation& p, const AbelianizationMap& psi);

/// Multivariable Alexander polynomial over H_1/torsion.
LaurentPoly alexander_polynomial(const Presentation& p);

/// One-variable Alexander polynomial of an integral class.
LaurentPoly alexander_polynomial(const Presentation& p, const CohomClass& phi);

}  // namespace turaev
