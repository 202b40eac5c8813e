#include "support.hpp"

#include "bethe/strings.hpp"
#include "bethe_cli/cli.hpp"

namespace bethe::test {
namespace {

using namespace bethe::cli;

TEST(Cli, TaskList) {
  const auto& names = task_names();
  EXPECT_EQ(names.size(), 15u);
  EXPECT_NE(std::find(names.begin(), names.end(), "lhs3-cancel"), names.end());
}

TEST(Cli, ProjectorSmallCase) {
  VerifyParams p;
  p.N = 2;
  p.bound = MultiIndex({3});
  p.seed = 7;
  Report r = run_verify({"projector", p});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_EQ(exit_code(r.status), 0);
}

TEST(Cli, DeterministicForSeed) {
  VerifyParams p;
  p.N = 3;
  p.bound = MultiIndex({1, 1});
  p.seed = 4;
  Report a = run_verify({"assoc", p});
  Report b = run_verify({"assoc", p});
  EXPECT_EQ(a.details, b.details);
}

TEST(Cli, Fig3DetailsShowFactorization) {
  Report r = run_verify({"fig3", {}});
  ASSERT_EQ(r.status, Status::Pass);
  bool seen = false;
  for (const auto& c : r.details["cases"])
    if (c["check"] == "part1 * part2 = part0") seen = c["pass"].get<bool>();
  EXPECT_TRUE(seen);
}

TEST(Cli, UnknownTaskExitsTwo) {
  Report r = run_verify({"unknown", {}});
  EXPECT_EQ(r.status, Status::Error);
  EXPECT_EQ(exit_code(r.status), 2);
  EXPECT_EQ(exit_code(std::vector<Report>{r}), 2);
}

TEST(Cli, GuardViolationIsError) {
  VerifyParams p;
  p.N = 2;
  p.bound = MultiIndex({9});
  EXPECT_EQ(run_verify({"projector", p}).status, Status::Error);
}

TEST(Cli, ExitCodes) {
  Report pass{"a", Status::Pass}, fail{"b", Status::Fail}, err{"c", Status::Error};
  EXPECT_EQ(exit_code(std::vector<Report>{pass, pass}), 0);
  EXPECT_EQ(exit_code(std::vector<Report>{pass, fail}), 1);
  EXPECT_EQ(exit_code(std::vector<Report>{fail, err}), 2);
}

TEST(Cli, ReportJsonRoundTrip) {
  Report r = run_verify({"vforms", {}});
  Json j = to_json(r);
  EXPECT_EQ(j["status"], "pass");
  Report back = report_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(summary_line(back).rfind("vforms: pass (", 0), 0u);
}

TEST(Cli, ExpandComposed) {
  ExpandParams p;
  p.j = 3;
  p.i = 1;
  EXPECT_EQ(run_expand("composed", p, false), "(q - q^-1)*F1(t)*F2(t)");
}

TEST(Cli, ExpandSeriesCoeffUnit) {
  ExpandParams p;
  p.N = 3;
  p.index = std::vector<int>{0, 0};
  EXPECT_EQ(run_expand("series-coeff", p, false), "1");
}

TEST(Cli, ExpandTableauxGroups) {
  ExpandParams p;
  p.rows = "3,2,1|3|1,1";
  p.assign = true;
  std::string out = run_expand("tableaux", p, false);
  EXPECT_NE(out.find("(.;.;t[1,6],t[1,5]) (t[3,2];t[2,3];t[1,4]) (t[3,1];t[2,2],t[2,1];t[1,3],t[1,2],t[1,1])"),
            std::string::npos);
  Json j = Json::parse(run_expand("tableaux", p, true));
  EXPECT_EQ(j["weight"], Json({6, 3, 2}));
  EXPECT_EQ(j["groups"].size(), 3u);
}

TEST(Cli, GridTopRowFirst) {
  std::string grid = render_grid(parse_rows("2,1|1"));
  EXPECT_EQ(grid,
            "+---+\n"
            "| 1 |\n"
            "+---+---+\n"
            "| 2 | 1 |\n"
            "+---+---+\n");
  EXPECT_THROW(parse_rows("1,a"), ParseError);
  EXPECT_THROW(parse_rows(""), ParseError);
}

TEST(Cli, ExpandGuardsAndUnknownTargets) {
  ExpandParams p;
  p.N = 2;
  p.index = std::vector<int>{9};
  EXPECT_THROW(run_expand("series-coeff", p, false), GuardExceeded);
  EXPECT_THROW(run_expand("nothing", ExpandParams{}, false), UnknownTask);
}

TEST(Cli, ExpandStringJsonDecodes) {
  ExpandParams p;
  p.j = 2;
  p.index = std::vector<int>{1, 1};
  AlgElem x = algelem_from_json(Json::parse(run_expand("string", p, true)));
  EXPECT_TRUE(alg_eq(x, build_string(2, AdmissibleIndex::ascending({1, 1}), Segment::canonical(MultiIndex({1, 1})))));
}

}  // namespace
}  // namespace bethe::test
