#include "turaev/divisibility.hpp"

namespace turaev {

Integer divisibility(const std::vector<Integer>& coords) {
  Integer g = 0;
  for (const auto& x : coords) g = gcd(g, x);
  if (g == 0) throw PreconditionError("divisibility of the zero class is undefined");
  return g;
}

Integer divisibility(const Presentation& p, const CohomClass& phi) {
  if (!phi.is_integral()) throw PreconditionError("divisibility needs an integral class");
  const auto coords = class_coordinates(p, free_abelianization(p), phi);
  std::vector<Integer> z;
  for (const auto& c : coords) {
    if (!is_integral(c)) throw InternalError("integral class has fractional coordinates");
    z.push_back(c.get_num());
  }
  return divisibility(z);
}

Integer next_prime_above(const Integer& n) {
  Integer p;
  if (n < 1) return 2;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

std::pair<std::vector<Integer>, std::vector<Integer>> div_counterexample(const Integer& x,
                                                                         const Integer& y) {
  if (y == 0) throw PreconditionError("div_counterexample needs y != 0");
  if (gcd(x, y) != 1) throw PreconditionError("div_counterexample needs a primitive class");
  const Integer p = next_prime_above(1 + abs(y));
  std::vector<Integer> alpha{Integer(1), Integer(0)};
  std::vector<Integer> beta{Integer(p * x + (p - 1)), Integer(p * y)};
  return {alpha, beta};
}

}  // namespace turaev
