#include "turaev/lp.hpp"

#include <optional>

namespace turaev {

namespace {

class Tableau {
 public:
  Tableau(Matrix<Rational> a, std::vector<Rational> b, std::vector<std::size_t> basis)
      : a_(std::move(a)), b_(std::move(b)), basis_(std::move(basis)) {}

  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return b_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_(r, c); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_(r, c);
    for (std::size_t j = 0; j < cols(); ++j) a_(r, j) /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || a_(i, c) == 0) continue;
      const Rational f = a_(i, c);
      for (std::size_t j = 0; j < cols(); ++j)
        if (a_(r, j) != 0) a_(i, j) -= f * a_(r, j);
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    Matrix<Rational> a(rows() - 1, cols());
    std::vector<Rational> b;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0, k = 0; i < rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols(); ++j) a(k, j) = a_(i, j);
      b.push_back(b_[i]);
      basis.push_back(basis_[i]);
      ++k;
    }
    a_ = std::move(a);
    b_ = std::move(b);
    basis_ = std::move(basis);
  }

  // Minimizes cost over columns [0, allowed). Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      std::vector<bool> in_basis(cols(), false);
      for (auto j : basis_) in_basis[j] = true;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        if (in_basis[j]) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (a_(i, j) != 0) d -= cost[basis_[i]] * a_(i, j);
        if (d < 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t c = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (a_(i, c) <= 0) continue;
        const Rational ratio = b_[i] / a_(i, c);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, c);
    }
  }

 private:
  Matrix<Rational> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.rows();
  const std::size_t n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw PreconditionError("inconsistent LP dimensions");

  // Phase I: artificial column n+i for row i, with b made nonnegative.
  Matrix<Rational> a(m, n + m, Rational(0));
  std::vector<Rational> b(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = lp.b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) a(i, j) = sign * lp.a(i, j);
    a(i, n + i) = 1;
    b[i] = sign * lp.b[i];
    basis[i] = n + i;
  }
  Tableau t(std::move(a), std::move(b), std::move(basis));
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  t.optimize(phase1, n + m);

  LpSolution out;
  Rational infeas = 0;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.basis()[i] >= n) infeas += t.rhs(i);
  if (infeas != 0) {
    out.status = LpSolution::Status::Infeasible;
    return out;
  }
  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (t.at(i, j) != 0) col = j;
    if (col) {
      t.pivot(i, *col);
      ++i;
    } else {
      t.drop_row(i);  // redundant equation
    }
  }

  std::vector<Rational> cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.c[j];
  if (!t.optimize(cost, n)) {
    out.status = LpSolution::Status::Unbounded;
    return out;
  }
  out.status = LpSolution::Status::Optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) out.x[t.basis()[i]] = t.rhs(i);
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.c[j] * out.x[j];
  return out;
}

}  // namespace turaev
