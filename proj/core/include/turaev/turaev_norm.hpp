#pragma once

#include <string>

#include "turaev/complex.hpp"

namespace turaev {

/// |k| = sum_e (n_e/2 - 1) |k(e)|. Requires empty boundary.
Rational weight(const TwoComplex& x, const Cochain1& k);

enum class NormMethod { Auto, LP, Brute };
enum class Certificate { BruteForce, LPIntegral };

const char* to_string(NormMethod m);
const char* to_string(Certificate c);
NormMethod parse_norm_method(std::string_view s);

struct NormResult {
  Rational value;
  Cochain1 optimal_cochain;  // cohomologous to the input, weight == value
  Certificate certificate = Certificate::LPIntegral;
  /// Set when the LP returned a fractional vertex and brute force was used
  /// instead. Should never happen; kept in reports.
  std::string internal_error;

  bool value_is_integral() const { return is_integral(value); }
};

/// t_X of the class represented by the cocycle k0: the minimum of
/// weight(k0 + delta f) over integer potentials f.
NormResult turaev_norm(const TwoComplex& x, const Cochain1& k0, NormMethod method = NormMethod::Auto);

/// Same, for a class given by values on named edges.
NormResult turaev_norm(const TwoComplex& x, const CohomClass& phi, NormMethod method = NormMethod::Auto);

/// Half-width of the brute-force search box for the integral cocycle k0:
/// ceil(weight(k0) / min positive weight) + max |k0(e)|.
Integer brute_force_bound(const TwoComplex& x, const Cochain1& k0);

}  // namespace turaev
