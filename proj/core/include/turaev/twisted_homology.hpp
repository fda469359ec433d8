#pragma once

#include <string>
#include <vector>

#include "turaev/presentation.hpp"
#include "turaev/qlaurent.hpp"

namespace turaev {

/// Chain complex of the infinite cyclic cover over Q[t^{+-1}], acting on row
/// vectors: C_2 --d2 (n x m)--> C_1 --d1 (m x 1)--> C_0.
struct FoxChainComplex {
  QtMatrix d2;
  QtMatrix d1;
};

/// d2 is the Fox matrix under phi, d1 has entries t^{phi(x_i)} - 1.
/// Throws InternalError if d2 d1 != 0.
FoxChainComplex fox_chain_complex(const Presentation& p, const CohomClass& phi);

/// Q[t^{+-1}]^free_rank + sum_i Q[t^{+-1}]/(f_i) with f_1 | f_2 | ... monic,
/// lowest exponent 0, non-units.
struct ModuleDecomposition {
  std::size_t free_rank = 0;
  std::vector<QLaurent> invariant_factors;

  /// "H1 = Q[t±]^r ⊕ Q[t±]/(f1) ⊕ ..." or "H1 = 0".
  std::string to_string() const;
  bool operator==(const ModuleDecomposition&) const = default;
};

/// H_1 = ker d1 / im d2.
ModuleDecomposition h1_qt(const Presentation& p, const CohomClass& phi);

/// Minimal number of generators of the torsion submodule.
std::size_t min_generators_torsion(const ModuleDecomposition& d);

}  // namespace turaev
