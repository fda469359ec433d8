#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "turaev/turaev_norm.hpp"

namespace turaev::cli {

/// Input text with the name it came from (a file path or a fixture name).
struct Source {
  std::string name;
  std::string text;
};

/// Reads a file, or resolves "fixture:<name>" to a built-in fixture.
Source load_source(const std::string& spec);

/// Complex or presentation file; presentations are turned into their
/// presentation complex.
Report cmd_norm(const Source& src, const std::string& phi, NormMethod method);
/// One class for all presentations (restricted to each), or one per file.
Report cmd_certify(const std::vector<Source>& srcs, const std::vector<std::string>& phis);
Report cmd_alex(const Source& src, const std::optional<std::string>& phi);
Report cmd_anorm(const Source& src, const std::string& phi, bool polytope);
Report cmd_cover(const Source& src, const std::string& phi, std::size_t order, bool check_inequality,
                 NormMethod method);
Report cmd_homology(const Source& src, const std::string& phi);
Report cmd_knot(const std::string& pd, const std::string& label);
Report cmd_divtest(long x, long y);
Report cmd_suite(std::uint64_t seed);

}  // namespace turaev::cli
