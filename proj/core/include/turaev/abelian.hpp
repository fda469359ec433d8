#pragma once

#include <vector>

#include "turaev/presentation.hpp"
#include "turaev/smith.hpp"

namespace turaev {

/// H_1 of the presented group.
AbelianGroup abelian_invariants(const Presentation& p);

/// The projection pi -> H = H_1/torsion = Z^rank, recorded as the image of
/// each generator. The basis of H is chosen so that the m x rank image matrix
/// is in column Hermite normal form; for link Wirtinger presentations this
/// makes generators map to standard basis vectors.
class AbelianizationMap {
 public:
  AbelianizationMap() = default;
  explicit AbelianizationMap(IntMatrix images) : images_(std::move(images)) {}

  std::size_t num_generators() const noexcept { return images_.rows(); }
  std::size_t rank() const noexcept { return images_.cols(); }
  const IntMatrix& images() const noexcept { return images_; }
  std::vector<long> image(std::size_t gen) const;

  /// Image of a word: sum of exp * image(gen).
  std::vector<long> image(const FreeWord& w) const;

  /// Throws PreconditionError unless every relator of p maps to zero.
  void require_valid_on(const Presentation& p) const;

  /// The map to Z given by an integral class (rank 1).
  static AbelianizationMap from_class(const Presentation& p, const CohomClass& phi);

 private:
  IntMatrix images_;
};

AbelianizationMap free_abelianization(const Presentation& p);

/// Column operations putting m into lower column-echelon Hermite form.
IntMatrix column_hermite_form(IntMatrix m);

/// Coordinates of phi in the dual basis of H, i.e. the values of phi on the
/// basis of H chosen by `psi`. Throws if phi does not factor through psi.
std::vector<Rational> class_coordinates(const Presentation& p, const AbelianizationMap& psi,
                                        const CohomClass& phi);

}  // namespace turaev
