#include "turaev/fixtures.hpp"

namespace turaev::fixtures {

std::string trefoil_two_generator() { return "gens: u v ; rels: u v u v^-1 u^-1 v^-1\n"; }

std::string wedge_of_tori(std::size_t n) {
  std::string gens, rels;
  for (std::size_t i = 1; i <= n; ++i) gens += " a" + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) gens += " x" + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) {
    if (i > 1) rels += " ,";
    rels += " [x" + std::to_string(i) + ",a" + std::to_string(i) + "]";
  }
  return "gens:" + gens + " ; rels:" + rels + "\n";
}

std::string torus_complex() {
  return "vertices: 1\n"
         "edge 0: 0 0 a\n"
         "edge 1: 0 0 x\n"
         "face: +1 +0 -1 -0\n";
}

std::optional<std::string> presentation(std::string_view name) {
  if (name == "trefoil_2gen") return trefoil_two_generator();
  for (std::size_t n = 1; n <= 4; ++n)
    if (name == "wedge" + std::to_string(n)) return wedge_of_tori(n);
  return std::nullopt;
}

std::vector<std::string> presentation_names() {
  return {"trefoil_2gen", "wedge1", "wedge2", "wedge3", "wedge4"};
}

}  // namespace turaev::fixtures
