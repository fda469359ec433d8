#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "suite.hpp"
#include "turaev/link.hpp"

using namespace turaev;
using namespace turaev::cli;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turaev norms, Alexander norms and complexity bounds in exact arithmetic"};
  app.require_subcommand(1);
  bool json = false;
  std::string method_name = "auto";
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--method", method_name, "Norm optimizer: lp, brute or auto")
      ->check(CLI::IsMember({"lp", "brute", "auto"}));
  app.fallthrough();

  std::string file, phi, pd, fixture, output;
  std::vector<std::string> phis;
  bool multivariable = false, polytope = false, check_inequality = false;
  std::size_t order = 2;
  long x = 1, y = 1;
  std::uint64_t seed = 0;

  auto* norm = app.add_subcommand("norm", "Turaev norm of a complex or presentation complex");
  norm->add_option("file", file, "Complex or presentation file (or fixture:<name>)")->required();
  norm->add_option("--phi", phi, "Class as name=value pairs, e.g. \"x=1,a=0\"")->required();

  auto* certify = app.add_subcommand("certify", "Certified bounds for the complexity function");
  certify->add_option("files", file, "Presentation files, comma separated")->required();
  certify->add_option("--phi", phis, "Class for all files, or one per file (repeat the option)")->required();

  auto* alex = app.add_subcommand("alex", "Alexander polynomial");
  alex->add_option("file", file, "Presentation file")->required();
  auto* alex_phi = alex->add_option("--phi", phi, "One-variable polynomial of this class");
  alex->add_flag("--multivariable", multivariable, "Multivariable polynomial over H1/torsion (default)")
      ->excludes(alex_phi);

  auto* anorm = app.add_subcommand("anorm", "Alexander norm and Newton support");
  anorm->add_option("file", file, "Presentation file")->required();
  anorm->add_option("--phi", phi, "Class")->required();
  anorm->add_flag("--polytope", polytope, "List Newton polytope vertices (rank <= 3)");

  auto* cover = app.add_subcommand("cover", "Cyclic cover of a presentation complex");
  cover->add_option("file", file, "Presentation file")->required();
  cover->add_option("--phi", phi, "Integral class defining the cover")->required();
  cover->add_option("--order", order, "Number of sheets")->check(CLI::PositiveNumber);
  cover->add_flag("--check-inequality", check_inequality, "Verify t_cover(p*phi) <= n t_base(phi)");

  auto* homology = app.add_subcommand("homology", "H1 of the infinite cyclic cover over Q[t^+-1]");
  homology->add_option("file", file, "Presentation file")->required();
  homology->add_option("--phi", phi, "Integral class")->required();

  auto* knot = app.add_subcommand("knot", "Wirtinger presentation of a PD code");
  auto* pd_opt = knot->add_option("--pd", pd, "PD code, e.g. \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  knot->add_option("--fixture", fixture, "trefoil, fig8 or whitehead")->excludes(pd_opt);
  knot->add_option("-o,--output", output, "Write the presentation to this file");

  auto* divtest = app.add_subcommand("divtest", "Divisibility counterexample for psi = (x, y)");
  divtest->add_option("--x", x, "First coordinate");
  divtest->add_option("--y", y, "Second coordinate (nonzero)");

  auto* suite_cmd = app.add_subcommand("paper-suite", "Run every acceptance criterion");
  suite_cmd->add_option("--seed", seed, "Random seed (default: built-in)");

  CLI11_PARSE(app, argc, argv);

  try {
    const NormMethod method = parse_norm_method(method_name);
    Report report("");
    if (*norm) {
      report = cmd_norm(load_source(file), phi, method);
    } else if (*certify) {
      std::vector<Source> srcs;
      for (const auto& f : split_commas(file)) srcs.push_back(load_source(f));
      report = cmd_certify(srcs, phis);
    } else if (*alex) {
      report = cmd_alex(load_source(file), phi.empty() ? std::nullopt : std::optional<std::string>(phi));
    } else if (*anorm) {
      report = cmd_anorm(load_source(file), phi, polytope);
    } else if (*cover) {
      report = cmd_cover(load_source(file), phi, order, check_inequality, method);
    } else if (*homology) {
      report = cmd_homology(load_source(file), phi);
    } else if (*knot) {
      if (pd.empty() && fixture.empty()) throw PreconditionError("give --pd or --fixture");
      std::string label = "pd";
      if (!fixture.empty()) {
        auto code = pd_fixture(fixture);
        if (!code) throw PreconditionError("unknown fixture '" + fixture + "'");
        pd = *code;
        label = fixture;
      }
      report = cmd_knot(pd, label);
      if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw PreconditionError("cannot write '" + output + "'");
        out << report.json()["results"]["presentation"].get<std::string>() << '\n';
      }
    } else if (*divtest) {
      report = cmd_divtest(x, y);
    } else if (*suite_cmd) {
      report = cmd_suite(seed == 0 ? suite::kDefaultSeed : seed);
    }
    if (json)
      std::cout << report.to_json();
    else
      report.render_text(std::cout);
    return report.ok() ? 0 : 1;
  } catch (const turaev::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
