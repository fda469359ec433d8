#include "turaev/certify.hpp"

#include "turaev/abelian.hpp"
#include "turaev/alexander.hpp"
#include "turaev/divisibility.hpp"

namespace turaev {

Sandwich certify_tbar(const std::vector<ClassedPresentation>& inputs) {
  if (inputs.empty()) throw PreconditionError("no presentations supplied");
  Sandwich out;
  const AbelianGroup h = abelian_invariants(inputs.front().presentation);
  for (std::size_t i = 1; i < inputs.size(); ++i)
    if (abelian_invariants(inputs[i].presentation) != h)
      throw PreconditionError("presentation " + std::to_string(i + 1) +
                              " has a different abelianization than the first");
  out.checks.push_back({"abelianizations agree", true, true, std::to_string(inputs.size()) + " presentation(s)"});

  for (const auto& in : inputs) require_class(in.presentation, in.phi);

  out.bounds = lower_bounds(inputs.front().presentation, inputs.front().phi);
  const auto& lb = out.bounds;
  out.checks.push_back({"a-bound hypotheses (b1 >= 2, Delta != 0)", lb.a_bound.has_value(), false,
                        "b1 = " + std::to_string(lb.b1)});
  out.checks.push_back({"degree-bound hypotheses (Delta_phi != 0, div = 1)", lb.deg_bound.has_value(), false,
                        lb.divisibility ? "div = " + lb.divisibility->get_str() : "class not integral"});

  // The degree and divisibility of phi are group invariants; disagreement
  // means the classes do not correspond.
  if (inputs.size() > 1 && inputs.front().phi.is_integral() && !inputs.front().phi.is_zero()) {
    bool same = true;
    for (std::size_t i = 1; i < inputs.size(); ++i) {
      const auto& [p, phi] = inputs[i];
      if (!phi.is_integral() || phi.is_zero()) {
        same = false;
        continue;
      }
      const auto d = alexander_polynomial(p, restrict_class(p, phi));
      if (!(d.is_zero() == lb.delta_phi->is_zero()) ||
          (!d.is_zero() && degree(d) != degree(*lb.delta_phi)) || divisibility(p, phi) != *lb.divisibility)
        same = false;
    }
    out.checks.push_back({"classes consistent across presentations", same, true,
                          "one-variable degree and divisibility compared"});
  }

  out.lower = 0;
  if (lb.a_bound && *lb.a_bound > out.lower) out.lower = *lb.a_bound;
  if (lb.deg_bound && *lb.deg_bound > out.lower) out.lower = *lb.deg_bound;

  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Presentation good = make_good(inputs[i].presentation);
    out.upper_terms.push_back(presentation_complexity(good, restrict_class(good, inputs[i].phi)));
    if (i == 0 || out.upper_terms.back() < out.upper) out.upper = out.upper_terms.back();
  }
  out.checks.push_back({"lower <= upper", out.lower <= out.upper, true,
                        to_string(out.lower) + " <= " + to_string(out.upper)});
  out.certified = out.lower == out.upper;
  return out;
}

}  // namespace turaev
