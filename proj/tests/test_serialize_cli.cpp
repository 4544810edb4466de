#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "seifert/cli.hpp"
#include "seifert/error.hpp"
#include "seifert/homology.hpp"
#include "seifert/report.hpp"
#include "seifert/serialize.hpp"
#include "seifert/surgery.hpp"

using namespace seifert;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const Outcome o = run_cli(args);
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return json::parse(o.out);
}

}  // namespace

TEST(Serialize, PlumbingTextRoundTrip) {
  for (long p = 2; p <= 12; ++p) {
    const PlumbingGraph g = d_plumbing_graph(p);
    EXPECT_EQ(plumbing_from_text(to_text(g)), g);
    EXPECT_EQ(plumbing_from_json(json::parse(to_json(g).dump())), g);
  }
}

TEST(Serialize, DiagramRoundTrip) {
  for (long p = 2; p <= 12; ++p) {
    for (bool mirrored : {false, true}) {
      const SurgeryDiagram d = xi_diagram(p, mirrored);
      EXPECT_EQ(diagram_from_text(to_text(d)), d);
      EXPECT_EQ(diagram_from_json(json::parse(to_json(d).dump())), d);
    }
  }
}

TEST(Serialize, MatrixRoundTripKeepsBigIntegers) {
  IntMatrix m{{1, 2}, {3, 4}};
  m(0, 0) = Integer("123456789012345678901234567890");
  EXPECT_EQ(matrix_from_json(json::parse(to_json(m).dump())), m);
}

TEST(Serialize, TextCommentsAndErrors) {
  const PlumbingGraph g = plumbing_from_text("# two vertices\nvertex 0 -2\n\nvertex 1 -3\nedge 0 1\n");
  EXPECT_EQ(g.framings, (std::vector<Integer>{-2, -3}));
  EXPECT_EQ(g.form(), (IntMatrix{{-2, 1}, {1, -3}}));
  EXPECT_THROW(plumbing_from_text("vertex 1 -2\n"), ValidationError);
  EXPECT_THROW(plumbing_from_text("vertex 0 x\n"), ValidationError);
  EXPECT_THROW(plumbing_from_text("bogus 0 1\n"), ValidationError);
  EXPECT_THROW(diagram_from_text("component 0 -1 0 2\n"), ValidationError);
  EXPECT_THROW(diagram_from_text("component 0 -1 0 1\nlink 0 0 3\n"), ValidationError);
  EXPECT_THROW(matrix_from_json(json::parse("[[\"1\"], [\"2\", \"3\"]]")), ValidationError);
}

TEST(ReportJson, RoundTrip) {
  Report r;
  r.command = "d3";
  r.argv = {"d3", "--p", "5"};
  r.inputs["p"] = 5;
  r.outputs["d3"] = "-3/4";
  r.check("d3_matches", true, "-3/4 vs -3/4");
  r.check("other", false);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(Report::from_json(json::parse(r.to_json().dump())), r);
  EXPECT_THROW(Report::from_json(json::parse("{\"command\": 3}")), ValidationError);
}

TEST(ReportJson, DecimalApproximationsAreLabelled) {
  const json a = decimal_approximations(json{{"x", "1/3"}, {"y", "2"}, {"z", {{"w", "-3/4"}}}});
  EXPECT_EQ(a["x"], "approx 0.333333");
  EXPECT_FALSE(a.contains("y"));
  EXPECT_EQ(a["z.w"], "approx -0.750000");
}

TEST(Cli, CountExamples) {
  const json j = run_json({"count", "-1", "1/2", "1/2", "1/7"});
  EXPECT_EQ(j["outputs"]["total"], "3");
  EXPECT_EQ(j["ok"], true);
  const json k = run_json({"count", "-1", "3/4", "2/3", "2/5"});
  EXPECT_EQ(k["outputs"]["phi"], "6");
  EXPECT_EQ(k["outputs"]["psi"], "2");
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run_cli({"count", "-1", "1/2", "1/3", "1/4"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"count", "-1", "1/2", "1/2", "x"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"count", "-2", "1/2", "1/2", "1/2"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"dinv", "--p", "1"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"cobordism", "pq", "--p", "3", "--k", "3"}).code, kExitInvalid);
}

TEST(Cli, CapFromEnvironmentIsAResourceError) {
  ::setenv("SEIFERT_CENSUS_CAP", "4", 1);
  const Outcome o = run_cli({"orbits", "-1", "3/4", "2/3", "2/5"});
  ::unsetenv("SEIFERT_CENSUS_CAP");
  EXPECT_EQ(o.code, kExitInvalid);
  EXPECT_EQ(run_cli({"orbits", "-1", "3/4", "2/3", "2/5"}).code, kExitOk);
}

TEST(Cli, SubcommandOutputs) {
  EXPECT_EQ(run_json({"d3", "--p", "5"})["outputs"]["d3"], "-3/4");
  EXPECT_EQ(run_json({"d3", "--p", "5", "--mirror"})["outputs"]["d3"], "-3/4");
  const json d = run_json({"dinv", "--p", "6"});
  EXPECT_EQ(d["ok"], true);
  const json h = run_json({"homology", "--p", "6"});
  EXPECT_EQ(h["ok"], true);
  EXPECT_EQ(run_json({"lattice", "pkl", "--p", "4", "--k", "5", "--l", "4"})["outputs"]["count"], "45");
  EXPECT_EQ(run_json({"lattice", "pk", "--p", "2", "--k", "3"})["outputs"]["count"], "5");
  EXPECT_EQ(run_json({"fillability", "--p", "10"})["outputs"]["obstructed"], false);
  EXPECT_EQ(run_json({"fillability", "--p", "11"})["outputs"]["obstructed"], true);
  const json c = run_json({"cobordism", "pklm", "--p", "3", "--k", "2", "--l", "2", "--m", "3", "--compare",
                           "xi:0,0,-1", "xi_prime:0,0,1"});
  EXPECT_EQ(c["outputs"]["compare"]["equal"], true);
  EXPECT_EQ(c["outputs"]["compare"]["witness"], json({"-1", "-1", "0", "0", "1"}));
  EXPECT_EQ(run_json({"cobordism", "pkm", "--p", "3", "--k", "3", "--m", "2"})["outputs"]["classes"], "4");
  EXPECT_EQ(run_json({"layers", "5/7"})["ok"], true);
  EXPECT_EQ(run_json({"verify", "--max-denominator", "5", "--p-max", "8", "--fill-max", "40"})["ok"], true);
}

TEST(Cli, TableAndSerialize) {
  const Outcome t = run_cli({"--table", "d3", "--p", "5"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_NE(t.out.find("outputs.d3"), std::string::npos);
  const Outcome s = run_cli({"serialize", "diagram", "--p", "4", "--format", "text"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(diagram_from_text(s.out), xi_diagram(4));
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "--max-denominator", "5", "--jobs", "3", "--p-max", "6",
                                      "--fill-max", "30", "--lattice-max", "3", "--stein-max", "4"};
  const Outcome a = run_cli(args);
  const Outcome b = run_cli(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> serial{"verify", "--max-denominator", "5", "--jobs", "1", "--p-max", "6",
                                        "--fill-max", "30", "--lattice-max", "3", "--stein-max", "4"};
  json ja = json::parse(a.out);
  json js = json::parse(run_cli(serial).out);
  EXPECT_EQ(ja["outputs"], js["outputs"]);
  EXPECT_EQ(ja["checks"], js["checks"]);
}
