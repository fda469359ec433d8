#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "turaev/arith.hpp"
#include "turaev/matrix.hpp"

namespace turaev {

/// Euclidean-domain operations over the integers, for smith_normal_form.
struct IntegerDomain {
  using value_type = Integer;
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer norm(const Integer& a) { return abs(a); }
  static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static Integer normal_unit(const Integer& a) { return a < 0 ? -1 : 1; }
  static Integer unit_inverse(const Integer& u) { return u; }
};

/// Result of a Smith normal form reduction: left * A * right = D, where D is
/// zero except for `diagonal` on its leading diagonal. The diagonal is
/// unit-normalized and forms a divisibility chain d0 | d1 | ... .
template <class Domain>
struct SmithForm {
  using E = typename Domain::value_type;
  std::vector<E> diagonal;  // nonzero entries only; rank = size
  std::optional<Matrix<E>> left;
  std::optional<Matrix<E>> left_inverse;
  std::optional<Matrix<E>> right;
};

/// Smith normal form over a Euclidean domain. Pivots are chosen by minimal
/// Euclidean norm, ties broken by lowest column index then lowest row.
template <class Domain>
SmithForm<Domain> smith_normal_form(Matrix<typename Domain::value_type> a,
                                    bool track_transforms = false) {
  using E = typename Domain::value_type;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  SmithForm<Domain> out;
  if (track_transforms) {
    out.left = Matrix<E>::identity(nr, Domain::zero(), Domain::one());
    out.left_inverse = Matrix<E>::identity(nr, Domain::zero(), Domain::one());
    out.right = Matrix<E>::identity(nc, Domain::zero(), Domain::one());
  }

  // row_i += c * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const E& c) {
    for (std::size_t k = 0; k < nc; ++k) a(i, k) = a(i, k) + c * a(j, k);
    if (track_transforms) {
      auto& u = *out.left;
      for (std::size_t k = 0; k < nr; ++k) u(i, k) = u(i, k) + c * u(j, k);
      auto& ui = *out.left_inverse;
      for (std::size_t k = 0; k < nr; ++k) ui(k, j) = ui(k, j) - c * ui(k, i);
    }
  };
  // col_i += c * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const E& c) {
    for (std::size_t k = 0; k < nr; ++k) a(k, i) = a(k, i) + c * a(k, j);
    if (track_transforms) {
      auto& v = *out.right;
      for (std::size_t k = 0; k < nc; ++k) v(k, i) = v(k, i) + c * v(k, j);
    }
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track_transforms) {
      out.left->swap_rows(i, j);
      out.left_inverse->swap_cols(i, j);
    }
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track_transforms) out.right->swap_cols(i, j);
  };
  auto scale_row = [&](std::size_t i, const E& unit) {
    for (std::size_t k = 0; k < nc; ++k) a(i, k) = unit * a(i, k);
    if (track_transforms) {
      auto& u = *out.left;
      for (std::size_t k = 0; k < nr; ++k) u(i, k) = unit * u(i, k);
      const E inv = Domain::unit_inverse(unit);
      auto& ui = *out.left_inverse;
      for (std::size_t k = 0; k < nr; ++k) ui(k, i) = ui(k, i) * inv;
    }
  };

  const std::size_t steps = nr < nc ? nr : nc;
  for (std::size_t t = 0; t < steps; ++t) {
    // Global pivot: minimal norm in the trailing submatrix.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t j = t; j < nc; ++j) {
      for (std::size_t i = t; i < nr; ++i) {
        if (Domain::is_zero(a(i, j))) continue;
        if (!found || Domain::norm(a(i, j)) < Domain::norm(a(pr, pc))) {
          found = true;
          pr = i;
          pc = j;
        }
      }
    }
    if (!found) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (Domain::is_zero(a(i, t))) continue;
        E q, r;
        Domain::divmod(a(i, t), a(t, t), q, r);
        add_row(i, t, -q);
        if (!Domain::is_zero(r)) remainder = true;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (Domain::is_zero(a(t, j))) continue;
        E q, r;
        Domain::divmod(a(t, j), a(t, t), q, r);
        add_col(j, t, -q);
        if (!Domain::is_zero(r)) remainder = true;
      }
      if (remainder) {
        // Move the smallest leftover in row/column t onto the pivot.
        std::size_t br = t, bc = t;
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!Domain::is_zero(a(t, j)) &&
              Domain::norm(a(t, j)) < Domain::norm(a(br, bc))) {
            br = t;
            bc = j;
          }
        for (std::size_t i = t + 1; i < nr; ++i)
          if (!Domain::is_zero(a(i, t)) &&
              Domain::norm(a(i, t)) < Domain::norm(a(br, bc))) {
            br = i;
            bc = t;
          }
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool fixed = false;
      for (std::size_t i = t + 1; i < nr && !fixed; ++i) {
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (Domain::is_zero(a(i, j))) continue;
          E q, r;
          Domain::divmod(a(i, j), a(t, t), q, r);
          if (!Domain::is_zero(r)) {
            add_row(t, i, Domain::one());
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    scale_row(t, Domain::normal_unit(a(t, t)));
    out.diagonal.push_back(a(t, t));
  }
  return out;
}

using IntMatrix = Matrix<Integer>;

/// Rank and invariant factors of an integer matrix; factors equal to 1 are
/// kept so the list has length rank.
inline std::vector<Integer> integer_invariant_factors(const IntMatrix& m) {
  return smith_normal_form<IntegerDomain>(m).diagonal;
}

/// Structure of a finitely generated abelian group Z^b + (+)_i Z/t_i.
struct AbelianGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain

  bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of the map given by the rows of `relations` acting on Z^cols.
AbelianGroup cokernel_structure(const IntMatrix& relations);

}  // namespace turaev
