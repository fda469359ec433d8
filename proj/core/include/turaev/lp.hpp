#pragma once

#include <vector>

#include "turaev/arith.hpp"
#include "turaev/matrix.hpp"

namespace turaev {

/// minimize c.x subject to A x = b, x >= 0, in exact rational arithmetic.
struct LinearProgram {
  Matrix<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rational> x;  // a basic optimal solution when Optimal
  Rational objective = 0;
};

/// Two-phase tableau simplex with Bland's rule; always terminates and
/// returns a basic (vertex) solution.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace turaev
