#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "turaev/fixtures.hpp"
#include "turaev/link.hpp"

using namespace turaev;
using namespace turaev::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string data(const std::string& name) { return std::string(TURAEV_DATA_DIR) + "/" + name; }

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TURAEV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

void expect_round_trip(const Report& r) {
  const std::string text = r.to_json();
  EXPECT_EQ(Json::parse(text).dump(2) + "\n", text);
}

}  // namespace

TEST(DataFiles, MatchCompiledFixtures) {
  EXPECT_EQ(read_file(data("trefoil_2gen.txt")), fixtures::trefoil_two_generator());
  for (std::size_t n = 1; n <= 4; ++n)
    EXPECT_EQ(read_file(data("wedge" + std::to_string(n) + ".txt")), fixtures::wedge_of_tori(n));
  EXPECT_EQ(read_file(data("torus.cx")), fixtures::torus_complex());
  for (const auto& name : pd_fixture_names()) EXPECT_EQ(read_file(data(name + ".pd")), *pd_fixture(name) + "\n");
}

TEST(Reports, JsonRoundTripIsByteIdentical) {
  expect_round_trip(cmd_norm(load_source("fixture:torus"), "x=1", NormMethod::Auto));
  expect_round_trip(cmd_certify({load_source("fixture:trefoil"), load_source(data("trefoil_2gen.txt"))},
                                {"x1=1,x2=1,x3=1", "u=1,v=1"}));
  expect_round_trip(cmd_alex(load_source(data("wedge2.txt")), std::nullopt));
  expect_round_trip(cmd_anorm(load_source("fixture:whitehead"), "x1=1,x2=1,x3=1,x4=1,x5=1", true));
  expect_round_trip(cmd_cover(load_source("fixture:trefoil_2gen"), "u=1,v=1", 3, true, NormMethod::LP));
  expect_round_trip(cmd_homology(load_source("fixture:fig8"), "x1=1,x2=1,x3=1,x4=1"));
  expect_round_trip(cmd_knot(*pd_fixture("trefoil"), "trefoil"));
  expect_round_trip(cmd_divtest(2, 3));
}

TEST(Reports, Values) {
  const auto c = cmd_certify({load_source("fixture:trefoil"), load_source("fixture:trefoil_2gen")},
                             {"x1=1,x2=1,x3=1", "u=1,v=1"});
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.json()["results"]["value"], "1");
  EXPECT_EQ(c.json()["results"]["certified"], true);

  const auto f = cmd_certify({load_source("fixture:fig8")}, {"x1=1,x2=1,x3=1,x4=1"});
  EXPECT_EQ(f.json()["results"]["interval"], Json::array({"1", "4"}));

  const auto n = cmd_norm(load_source(data("torus.cx")), "x=1", NormMethod::Brute);
  EXPECT_EQ(n.json()["results"]["norm"]["value"], "0");

  const auto a = cmd_alex(load_source("fixture:fig8"), std::string("x1=1,x2=1,x3=1,x4=1"));
  EXPECT_EQ(a.json()["results"]["polynomial"], "1 - 3*t + t^2");
}

TEST(Reports, OkRequiresEveryRequiredCheck) {
  Report r("x");
  EXPECT_TRUE(r.ok());
  r.check("informational", false, false, "");
  EXPECT_TRUE(r.ok());
  r.check("required", true, true, "");
  EXPECT_TRUE(r.ok());
  r.check("required failure", false, true, "");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.json()["checks"].size(), 3u);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("certify " + data("trefoil_2gen.txt") + " --phi u=1,v=1").status, 0);
  EXPECT_EQ(run("norm fixture:torus --phi x=1 --method brute").status, 0);
  // Class that does not vanish on the face: report fails.
  const std::string open = ::testing::TempDir() + "open.cx";
  std::ofstream(open) << "vertices: 1\nedge 0: 0 0 a\nedge 1: 0 0 b\nface: +0 +1 -0\n";
  EXPECT_EQ(run("norm " + open + " --phi a=1").status, 1);
  EXPECT_EQ(run("alex /nonexistent/file.txt").status, 2);
  EXPECT_EQ(run("norm fixture:torus --phi x=1/0").status, 2);
  EXPECT_EQ(run("knot --pd \"X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)\"").status, 2);
  EXPECT_NE(run("nosuchcommand").status, 0);
}

TEST(Binary, JsonOutput) {
  const auto r = run("--json divtest --x 1 --y 2");
  ASSERT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "divtest");
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j.dump(2) + "\n", r.out);

  const auto k = run("knot --fixture trefoil --json");
  ASSERT_EQ(k.status, 0);
  EXPECT_EQ(Json::parse(k.out)["results"]["t_P"], "3");
}
