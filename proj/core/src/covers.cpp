#include "turaev/covers.hpp"

#include <numeric>

namespace turaev {

CoverSpec::CoverSpec(std::size_t index, std::vector<Permutation> action)
    : index_(index), action_(std::move(action)) {
  if (index_ == 0) throw PreconditionError("cover index must be positive");
  for (const auto& perm : action_) {
    if (perm.size() != index_) throw PreconditionError("permutation has wrong length");
    Permutation inv(index_, index_);
    for (std::size_t s = 0; s < index_; ++s) {
      if (perm[s] >= index_ || inv[perm[s]] != index_) throw PreconditionError("action is not a permutation");
      inv[perm[s]] = s;
    }
    inverse_.push_back(std::move(inv));
  }
}

CoverSpec CoverSpec::cyclic(const Presentation& p, const CohomClass& phi, std::size_t n) {
  if (!phi.is_integral()) throw PreconditionError("cyclic cover needs an integral class");
  const auto vals = class_values(p, phi);
  Integer g = n;
  std::vector<Permutation> action;
  for (const auto& v : vals) {
    const Integer k = v.get_num();
    g = gcd(g, k);
    Integer shift;
    mpz_fdiv_r_ui(shift.get_mpz_t(), k.get_mpz_t(), n);
    Permutation perm(n);
    for (std::size_t s = 0; s < n; ++s) perm[s] = (s + shift.get_ui()) % n;
    action.push_back(std::move(perm));
  }
  if (g != 1) throw PreconditionError("class values do not generate Z/" + std::to_string(n) + "; cover is disconnected");
  CoverSpec spec(n, std::move(action));
  spec.validate(p);
  return spec;
}

std::size_t CoverSpec::act(const FreeWord& w, std::size_t sheet) const {
  for (const auto& l : w.letters()) sheet = l.exp > 0 ? action_[l.gen][sheet] : inverse_[l.gen][sheet];
  return sheet;
}

void CoverSpec::validate(const Presentation& p) const {
  if (action_.size() != p.num_generators()) throw PreconditionError("action needs one permutation per generator");
  for (std::size_t j = 0; j < p.num_relators(); ++j)
    for (std::size_t s = 0; s < index_; ++s)
      if (act(p.relators()[j], s) != s)
        throw PreconditionError("relator " + std::to_string(j + 1) + " acts nontrivially; not a cover");
  std::vector<bool> seen(index_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (const auto& perm : action_)
      if (!seen[perm[s]]) {
        seen[perm[s]] = true;
        ++reached;
        stack.push_back(perm[s]);
      }
  }
  if (reached != index_) throw PreconditionError("action is not transitive; cover is disconnected");
}

TwoComplex cover_complex(const Presentation& p, const CoverSpec& spec) {
  spec.validate(p);
  const std::size_t n = spec.index();
  std::vector<Edge> edges;
  for (std::size_t g = 0; g < p.num_generators(); ++g)
    for (std::size_t s = 0; s < n; ++s)
      edges.push_back({s, spec.action()[g][s], p.generators()[g] + "." + std::to_string(s)});

  // Relators act trivially, so each (relator, sheet) lifts to a closed walk.
  std::vector<AttachingWalk> faces;
  for (const auto& r : p.relators()) {
    for (std::size_t s = 0; s < n; ++s) {
      AttachingWalk walk;
      std::size_t sheet = s;
      for (const auto& l : r.letters()) {
        if (l.exp > 0) {
          walk.push_back({l.gen * n + sheet, 1});
          sheet = spec.action()[l.gen][sheet];
        } else {
          sheet = spec.act(FreeWord({l}), sheet);
          walk.push_back({l.gen * n + sheet, -1});
        }
      }
      faces.push_back(std::move(walk));
    }
  }
  return TwoComplex(n, std::move(edges), std::move(faces));
}

CohomClass lift_class(const Presentation& p, const CoverSpec& spec, const CohomClass& phi) {
  const auto vals = class_values(p, phi);
  CohomClass out;
  for (std::size_t g = 0; g < p.num_generators(); ++g)
    for (std::size_t s = 0; s < spec.index(); ++s)
      out.set(p.generators()[g] + "." + std::to_string(s), vals[g]);
  return out;
}

CoverInequality verify_cover_inequality(const Presentation& p, const CoverSpec& spec,
                                        const CohomClass& phi, NormMethod method) {
  require_class(p, phi);
  const TwoComplex base = complex_from_presentation(p);
  const TwoComplex cover = cover_complex(p, spec);
  CoverInequality out;
  out.base_norm = turaev_norm(base, cochain_from_values(base, phi), method);
  out.cover_norm = turaev_norm(cover, cochain_from_values(cover, lift_class(p, spec, phi)), method);
  out.lhs = out.cover_norm.value;
  out.rhs = Rational(static_cast<long>(spec.index())) * out.base_norm.value;
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace turaev
