#include "turaev/twisted_homology.hpp"

#include "turaev/abelian.hpp"
#include "turaev/alexander.hpp"
#include "turaev/smith.hpp"

namespace turaev {

FoxChainComplex fox_chain_complex(const Presentation& p, const CohomClass& phi) {
  if (!phi.is_integral()) throw PreconditionError("twisted homology needs an integral class");
  require_class(p, phi);
  const std::size_t n = p.num_relators(), m = p.num_generators();
  const auto vals = class_values(p, phi);
  IntMatrix images(m, 1, Integer(0));
  for (std::size_t i = 0; i < m; ++i) images(i, 0) = vals[i].get_num();
  const AbelianizationMap psi(images);

  FoxChainComplex c{QtMatrix(n, m), QtMatrix(m, 1)};
  for (std::size_t i = 0; i < m; ++i)
    c.d1(i, 0) = QLaurent::monomial(vals[i].get_num().get_si()) - QLaurent(Rational(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      c.d2(j, i) = QLaurent::from(push_forward(fox_derivative(p.relators()[j], i), psi));

  const auto composite = multiply(c.d2, c.d1, QLaurent());
  for (std::size_t j = 0; j < n; ++j)
    if (!composite(j, 0).is_zero()) throw InternalError("d2 d1 != 0: Fox identity violated");
  return c;
}

ModuleDecomposition h1_qt(const Presentation& p, const CohomClass& phi) {
  const auto c = fox_chain_complex(p, phi);
  const std::size_t n = c.d2.rows(), m = c.d2.cols();

  // Rows 1..m-1 of the left transform U of d1 span ker d1; the rows of d2
  // lie in that kernel, so d2 U^-1 vanishes in column 0.
  QtMatrix b;
  auto s1 = smith_normal_form<QLaurentDomain>(c.d1, true);
  if (s1.diagonal.empty()) {
    b = c.d2;
  } else {
    const auto coords = multiply(c.d2, *s1.left_inverse, QLaurent());
    b = QtMatrix(n, m - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (!coords(j, 0).is_zero()) throw InternalError("boundary does not lie in the cycle module");
      for (std::size_t i = 1; i < m; ++i) b(j, i - 1) = coords(j, i);
    }
  }

  ModuleDecomposition out;
  const auto s2 = smith_normal_form<QLaurentDomain>(b);
  out.free_rank = b.cols() - s2.diagonal.size();
  for (const auto& d : s2.diagonal)
    if (!d.is_unit()) out.invariant_factors.push_back(d.normalized());
  return out;
}

std::size_t min_generators_torsion(const ModuleDecomposition& d) { return d.invariant_factors.size(); }

std::string ModuleDecomposition::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Q[t±]");
  if (free_rank > 1) parts.push_back("Q[t±]^" + std::to_string(free_rank));
  for (const auto& f : invariant_factors) parts.push_back("Q[t±]/(" + f.to_string() + ")");
  if (parts.empty()) return "H1 = 0";
  std::string out = "H1 = " + parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

}  // namespace turaev
