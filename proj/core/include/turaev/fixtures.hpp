#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turaev::fixtures {

/// <u, v | u v u v^-1 u^-1 v^-1>, the trefoil group split along a genus-one
/// Seifert surface.
std::string trefoil_two_generator();

/// <a1..an, x1..xn | [x1,a1], ..., [xn,an]>.
std::string wedge_of_tori(std::size_t n);

/// One-vertex torus complex with edges a and x.
std::string torus_complex();

/// Presentation fixtures by name: trefoil_2gen, wedge1..wedge4.
std::optional<std::string> presentation(std::string_view name);
std::vector<std::string> presentation_names();

}  // namespace turaev::fixtures
