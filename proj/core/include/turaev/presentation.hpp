#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/arith.hpp"
#include "turaev/smith.hpp"
#include "turaev/word.hpp"

namespace turaev {

/// A finite presentation <x_1..x_m | r_1..r_n>. Every letter of every relator
/// refers to a generator of this presentation; names are unique.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<FreeWord> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<FreeWord>& relators() const noexcept { return relators_; }
  std::size_t num_generators() const noexcept { return generators_.size(); }
  std::size_t num_relators() const noexcept { return relators_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Index of `name`; throws PreconditionError if unknown.
  std::size_t index_of(std::string_view name) const;

  /// #(x): appearances of x^{+-1} across all relators.
  std::size_t occurrence_count(std::size_t gen) const;
  std::size_t occurrence_count(std::string_view name) const {
    return occurrence_count(index_of(name));
  }

  /// Good: every generator occurs at least twice.
  bool is_good() const;

  /// Renders a word with this presentation's names, e.g. "x a x^-1 a^-1".
  std::string format_word(const FreeWord& w) const;
  /// Canonical text form, parseable by parse_presentation.
  std::string to_string() const;

  /// Rows = relators, columns = generators, entries = exponent sums.
  IntMatrix relator_matrix() const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<FreeWord> relators_;
};

/// Parses `gens: a x ; rels: [x,a] , a a x^-1`. Relators are freely reduced;
/// relators that reduce to the empty word are dropped. `[g,h]` expands to
/// g h g^-1 h^-1 and brackets nest.
Presentation parse_presentation(std::string_view text);

/// Tietze-eliminates generators with #(x)=1 (lowest index first), then pads
/// every generator with #(x)=0 by a trivial relator x x^-1. The result is
/// good, presents the same group, and uses a subset of the original
/// generator names in the original order.
Presentation make_good(const Presentation& p);

/// A cohomology class given by rational values on named generators (or named
/// edges, for complexes). Absent names take the value 0.
class CohomClass {
 public:
  CohomClass() = default;
  explicit CohomClass(std::map<std::string, Rational> values);

  /// Parses "x=1,a=0,b=-3/2".
  static CohomClass parse(std::string_view text);

  Rational value(std::string_view name) const;
  void set(const std::string& name, const Rational& v);
  const std::map<std::string, Rational>& values() const noexcept { return values_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Least common multiple of the value denominators.
  Integer denominator_lcm() const;
  CohomClass scaled(const Rational& c) const;
  CohomClass operator+(const CohomClass& rhs) const;

  std::string to_string() const;

  bool operator==(const CohomClass&) const = default;

 private:
  std::map<std::string, Rational> values_;
};

/// Values of phi on the generators of p, in generator order. Throws
/// PreconditionError if phi names something that is not a generator.
std::vector<Rational> class_values(const Presentation& p, const CohomClass& phi);

/// phi(w) = sum over letters of exp * phi(gen).
Rational evaluate(const std::vector<Rational>& values, const FreeWord& w);

/// True iff phi kills every relator.
bool is_class(const Presentation& p, const CohomClass& phi);

/// Throws PreconditionError unless phi is a class on p.
void require_class(const Presentation& p, const CohomClass& phi);

/// Presentation complexity t_P(phi) = sum_i (#(x_i)/2 - 1) |phi(x_i)|.
/// Requires a good presentation and a class on it.
Rational presentation_complexity(const Presentation& p, const CohomClass& phi);

/// Restriction of phi to the generators of p (drops other names).
CohomClass restrict_class(const Presentation& p, const CohomClass& phi);

}  // namespace turaev
