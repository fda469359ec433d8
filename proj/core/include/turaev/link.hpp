#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turaev/abelian.hpp"
#include "turaev/presentation.hpp"

namespace turaev {

/// Planar diagram code. Each crossing X(a,b,c,d) lists its four arc labels
/// counterclockwise starting from the incoming under-arc a; the under-strand
/// leaves along c and the over-strand joins b and d.
struct PDCode {
  std::vector<std::array<long, 4>> crossings;
};

/// Parses "X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)"; square brackets are accepted
/// too. Every label must occur exactly twice.
PDCode parse_pd(std::string_view text);

struct WirtingerPresentation {
  Presentation presentation;  // generators x1.. in order of smallest label
  std::size_t num_components = 0;
  std::vector<std::size_t> arc_component;      // per generator
  std::vector<CohomClass> meridian_classes;    // one per component
  AbelianizationMap meridian_map;              // generator -> e_component

  /// The class sending every generator to 1.
  CohomClass total_meridian_class() const;
};

/// One generator per arc and one relator x_o^e x_a x_o^-e x_c^-1 per
/// crossing, where the under-strand passes from arc a to arc c beneath arc
/// o and e = +1 when the over-strand runs from b to d. Components are
/// oriented by increasing labels.
WirtingerPresentation wirtinger(const PDCode& pd);

/// Built-in PD codes: trefoil, fig8, whitehead.
std::optional<std::string> pd_fixture(std::string_view name);
std::vector<std::string> pd_fixture_names();

}  // namespace turaev
