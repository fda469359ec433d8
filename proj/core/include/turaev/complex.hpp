#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/arith.hpp"
#include "turaev/presentation.hpp"
#include "turaev/smith.hpp"

namespace turaev {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string name;

  bool operator==(const Edge&) const = default;
};

/// One step of an attaching walk: traverse `edge` forwards (+1) or
/// backwards (-1).
struct WalkStep {
  std::size_t edge = 0;
  int dir = 1;

  bool operator==(const WalkStep&) const = default;
};

using AttachingWalk = std::vector<WalkStep>;

/// Values on the oriented edges of a complex.
class Cochain1 {
 public:
  Cochain1() = default;
  explicit Cochain1(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t e) const { return values_[e]; }
  Rational& operator[](std::size_t e) { return values_[e]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  bool is_integral() const;
  bool is_zero() const;
  Cochain1 operator+(const Cochain1& rhs) const;
  Cochain1 scaled(const Rational& c) const;

  bool operator==(const Cochain1&) const = default;

 private:
  std::vector<Rational> values_;
};

/// A finite connected CW 2-complex given combinatorially. Every attaching
/// walk is a nonempty closed edge path; edge names are unique.
class TwoComplex {
 public:
  TwoComplex(std::size_t num_vertices, std::vector<Edge> edges, std::vector<AttachingWalk> faces);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<AttachingWalk>& faces() const noexcept { return faces_; }

  std::optional<std::size_t> find_edge(std::string_view name) const;

  /// n_e: traversals of e, in either direction, over all attaching walks.
  std::vector<std::size_t> edge_multiplicities() const;

  long euler_characteristic() const;

  /// Plain-text form accepted by parse_complex.
  std::string serialize() const;

  /// Start and end vertex of a step.
  std::size_t step_start(const WalkStep& s) const;
  std::size_t step_end(const WalkStep& s) const;

  bool operator==(const TwoComplex&) const = default;

 private:
  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  std::vector<AttachingWalk> faces_;
};

/// Parses
///   vertices: 1
///   edge 0: 0 0 x
///   face: +0 +1 -0 -1
/// Edge names are optional and default to e<i>. '#' starts a comment.
TwoComplex parse_complex(std::string_view text);

/// One vertex, a loop per generator (named after it), a face per relator.
TwoComplex complex_from_presentation(const Presentation& p);

/// Edge-multiplicity criterion: every edge has n_e >= 2.
bool boundary_is_empty(const TwoComplex& x);

/// Spanning tree by breadth-first search from vertex 0, scanning incident
/// edges in increasing index. Returns a flag per edge.
std::vector<bool> spanning_tree(const TwoComplex& x);

bool is_cocycle(const TwoComplex& x, const Cochain1& k);

/// (delta f)(e) = f(target) - f(source).
Cochain1 coboundary(const TwoComplex& x, const std::vector<Rational>& f);

/// Cochain with k(e) = phi(name of e). Throws if phi names an unknown edge.
Cochain1 cochain_from_values(const TwoComplex& x, const CohomClass& phi);

/// Cohomologous cocycle vanishing on the spanning tree. Throws
/// PreconditionError if k is not a cocycle.
Cochain1 normalize_cocycle(const TwoComplex& x, const Cochain1& k);

/// The representative of phi (values keyed by edge name) that vanishes on
/// the spanning tree. Throws PreconditionError if phi is not a cocycle.
Cochain1 cocycle_from_class(const TwoComplex& x, const CohomClass& phi);

/// Integer cellular boundary matrices: d2 is faces x edges, d1 is
/// edges x vertices (row vectors map down).
IntMatrix boundary_matrix_2(const TwoComplex& x);
IntMatrix boundary_matrix_1(const TwoComplex& x);

/// H_1(X; Z) as betti number plus torsion invariant factors.
AbelianGroup h1_structure(const TwoComplex& x);

}  // namespace turaev
