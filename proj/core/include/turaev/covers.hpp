#pragma once

#include <vector>

#include "turaev/complex.hpp"
#include "turaev/presentation.hpp"
#include "turaev/turaev_norm.hpp"

namespace turaev {

using Permutation = std::vector<std::size_t>;

/// A finite cover of a presentation complex, given by a right action of the
/// generators on the sheets {0..n-1}: sheet s moves to action[g][s].
class CoverSpec {
 public:
  CoverSpec(std::size_t index, std::vector<Permutation> action);

  /// Generator g rotates the sheets by phi(g) mod n. Requires an integral
  /// class whose values generate Z/n.
  static CoverSpec cyclic(const Presentation& p, const CohomClass& phi, std::size_t n);

  std::size_t index() const noexcept { return index_; }
  const std::vector<Permutation>& action() const noexcept { return action_; }

  /// Sheet reached from `sheet` by reading w left to right.
  std::size_t act(const FreeWord& w, std::size_t sheet) const;

  /// Throws PreconditionError unless every relator acts trivially and the
  /// action is transitive.
  void validate(const Presentation& p) const;

 private:
  std::size_t index_;
  std::vector<Permutation> action_;
  std::vector<Permutation> inverse_;
};

/// Reidemeister-Schreier cover of the presentation complex: n vertices, an
/// edge "g.s" from s to action[g][s] for each generator g and sheet s, and
/// one lifted face per (relator, sheet).
TwoComplex cover_complex(const Presentation& p, const CoverSpec& spec);

/// Pullback of phi: every lift "g.s" carries phi(g).
CohomClass lift_class(const Presentation& p, const CoverSpec& spec, const CohomClass& phi);

struct CoverInequality {
  Rational lhs;  // t of the cover on the lifted class
  Rational rhs;  // index times t of the base
  bool holds = false;
  NormResult cover_norm;
  NormResult base_norm;
};

/// t_cover(p* phi) <= n t_base(phi). The presentation must be good.
CoverInequality verify_cover_inequality(const Presentation& p, const CoverSpec& spec,
                                        const CohomClass& phi, NormMethod method = NormMethod::Auto);

}  // namespace turaev
