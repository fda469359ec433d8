#include "turaev/abelian.hpp"

namespace turaev {

AbelianGroup cokernel_structure(const IntMatrix& relations) {
  const auto diag = integer_invariant_factors(relations);
  AbelianGroup g;
  g.betti = relations.cols() - diag.size();
  for (const auto& d : diag)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup abelian_invariants(const Presentation& p) { return cokernel_structure(p.relator_matrix()); }

std::vector<long> AbelianizationMap::image(std::size_t gen) const {
  std::vector<long> v(rank());
  for (std::size_t j = 0; j < rank(); ++j) v[j] = images_(gen, j).get_si();
  return v;
}

std::vector<long> AbelianizationMap::image(const FreeWord& w) const {
  std::vector<long> v(rank(), 0);
  for (const auto& l : w.letters())
    for (std::size_t j = 0; j < rank(); ++j) v[j] += l.exp * images_(l.gen, j).get_si();
  return v;
}

void AbelianizationMap::require_valid_on(const Presentation& p) const {
  if (p.num_generators() != num_generators())
    throw PreconditionError("abelianization map has wrong number of generators");
  for (const auto& r : p.relators())
    for (long x : image(r))
      if (x != 0)
        throw PreconditionError("abelianization map does not kill relator '" + p.format_word(r) + "'");
}

AbelianizationMap AbelianizationMap::from_class(const Presentation& p, const CohomClass& phi) {
  if (!phi.is_integral()) throw PreconditionError("class must be integral");
  const auto vals = class_values(p, phi);
  IntMatrix m(p.num_generators(), 1, Integer(0));
  for (std::size_t i = 0; i < vals.size(); ++i) m(i, 0) = vals[i].get_num();
  AbelianizationMap psi(std::move(m));
  psi.require_valid_on(p);
  return psi;
}

IntMatrix column_hermite_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) m(r, dst) -= q * m(r, src);
  };
  std::size_t pc = 0;
  for (std::size_t r = 0; r < rows && pc < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j)
        if (m(r, j) != 0 && (best == cols || abs(m(r, j)) < abs(m(r, best)))) best = j;
      if (best == cols) break;
      m.swap_cols(pc, best);
      bool clear = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (m(r, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, pc).get_mpz_t());
        col_axpy(j, pc, q);
        if (m(r, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m(r, pc) == 0) continue;
    if (m(r, pc) < 0)
      for (std::size_t k = 0; k < rows; ++k) m(k, pc) = -m(k, pc);
    for (std::size_t j = 0; j < pc; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, pc).get_mpz_t());
      col_axpy(j, pc, q);
    }
    ++pc;
  }
  return m;
}

AbelianizationMap free_abelianization(const Presentation& p) {
  const IntMatrix rel = p.relator_matrix();
  const auto snf = smith_normal_form<IntegerDomain>(rel, true);
  const std::size_t m = p.num_generators();
  const std::size_t rank = snf.diagonal.size();
  IntMatrix psi(m, m - rank, Integer(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = rank; j < m; ++j) psi(i, j - rank) = (*snf.right)(i, j);
  AbelianizationMap out(column_hermite_form(std::move(psi)));
  out.require_valid_on(p);
  return out;
}

std::vector<Rational> class_coordinates(const Presentation& p, const AbelianizationMap& psi,
                                        const CohomClass& phi) {
  const auto vals = class_values(p, phi);
  const IntMatrix& m = psi.images();
  std::vector<Rational> c(psi.rank(), Rational(0));
  // Echelon form: the first nonzero entry of each column j sits in a row
  // whose entries in later columns vanish.
  for (std::size_t j = 0; j < psi.rank(); ++j) {
    std::size_t r = 0;
    while (r < m.rows() && m(r, j) == 0) ++r;
    if (r == m.rows()) throw InternalError("abelianization map is not surjective");
    Rational rest = vals[r];
    for (std::size_t k = 0; k < j; ++k) rest -= Rational(m(r, k)) * c[k];
    c[j] = rest / Rational(m(r, j));
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < psi.rank(); ++j) s += Rational(m(i, j)) * c[j];
    if (s != vals[i]) throw PreconditionError("class does not factor through H_1/torsion");
  }
  return c;
}

}  // namespace turaev
