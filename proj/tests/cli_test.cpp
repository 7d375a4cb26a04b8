#include "hat/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hat/error.hpp"
#include "hat/export.hpp"

namespace hat {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun hatq(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
    ++n;
  return n;
}

TEST(CliTest, ParameterLists) {
  EXPECT_EQ(parse_parameter_list("2..6"), (std::vector<int>{2, 3, 4, 5, 6}));
  EXPECT_EQ(parse_parameter_list("9,3,5,3"), (std::vector<int>{3, 5, 9}));
  EXPECT_EQ(parse_parameter_list("2..3,7"), (std::vector<int>{2, 3, 7}));
  EXPECT_TRUE(parse_parameter_list("").empty());
  EXPECT_TRUE(parse_parameter_list("5..4").empty());
  EXPECT_THROW(parse_parameter_list("a"), Error);
  EXPECT_THROW(parse_orientation_list("4"), Error);
}

TEST(CliTest, CanonicalOrderAndSkips) {
  RunConfig cfg;
  cfg.z = {3};
  cfg.y = {3, 2};
  cfg.x = {2};
  cfg.ks = {Orientation::K1, Orientation::K2, Orientation::K3};
  std::vector<std::string> skipped;
  const auto specs = selected_specs(cfg, &skipped);
  ASSERT_EQ(specs.size(), 3u + 3u + 2u + 1u);
  EXPECT_EQ(specs.front(), (FamilySpec{Family::X, 2, Orientation::K1}));
  EXPECT_EQ(specs.back(), (FamilySpec{Family::Z, 3, Orientation::K3}));
  ASSERT_EQ(skipped.size(), 1u);  // Y(3) with k=1
}

TEST(CliTest, ValidateRange) {
  const CliRun r = hatq({"validate", "--x", "2..3", "--y", "2", "--z", "3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count(r.out, "PASS"), 6u + 3u + 2u);
  EXPECT_NE(r.out.find("(X(3),G_3(3)): in OG(4), alternating cycles (6,6) tight"), std::string::npos);
}

TEST(CliTest, ValidateFullGroup) {
  const CliRun r = hatq({"validate", "--x", "3", "--k", "full"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("arc-transitive, not in OG(4)"), std::string::npos);
}

TEST(CliTest, EmptyRange) {
  const CliRun r = hatq({"validate", "--x", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 checks"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(hatq({}).code, 2);
  EXPECT_EQ(hatq({"validate", "--k", "7", "--x", "3"}).code, 2);
  EXPECT_EQ(hatq({"tables", "table9", "--x", "3"}).code, 2);
  EXPECT_EQ(hatq({"validate", "--x", "3", "--format", "dot"}).code, 2);
}

TEST(CliTest, Table4ForR3) {
  const CliRun r = hatq({"tables", "table4", "--r", "3", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  for (const char* row : {"T4.L1 (X(3)", "T4.L4 (Y(3)", "T4.L5", "T4.L6", "T4.L7", "T4.L8"})
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
}

TEST(CliTest, Table2) {
  const CliRun r = hatq({"tables", "table2", "--y", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("basic, biquasiprimitive"), std::string::npos);
}

TEST(CliTest, Remark14cFailureSetsExitCode) {
  const CliRun r = hatq({"tables", "remark14c", "--x", "5", "--k", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("missing (Y(2),H_2(2))"), std::string::npos);
}

TEST(CliTest, JsonReportIsDeterministicAcrossJobs) {
  const CliRun a = hatq({"tables", "table3", "--x", "2..4", "--format", "json", "--jobs", "1"});
  const CliRun b = hatq({"tables", "table3", "--x", "2..4", "--format", "json", "--jobs", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["results"][0]["row"], "T3.L2");
  EXPECT_EQ(j["results"][0]["status"], "verified");
  EXPECT_TRUE(j["results"][0].contains("witness"));
}

TEST(CliTest, ExportDot) {
  const CliRun r = hatq({"export", "--x", "2", "--k", "3", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(r.out, " -> "), 32u);
  EXPECT_EQ(count(r.out, "[label="), 16u);

  const CliRun y = hatq({"export", "--y", "2", "--format", "dot"});
  EXPECT_EQ(y.out.rfind("graph", 0), 0u);
  EXPECT_EQ(count(y.out, " -- "), 16u);  // K_{4,4}
  EXPECT_EQ(count(y.out, " -> "), 0u);
}

TEST(CliTest, ExportJson) {
  const CliRun r = hatq({"export", "--z", "3", "--k", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["graph"]["vertices"], 9);
  EXPECT_EQ(j["graph"]["arcs"].size(), 18u);
  EXPECT_EQ(j["graph"]["edges"].size(), 18u);
}

TEST(CliTest, BasicAndQuotient) {
  const CliRun b = hatq({"basic", "--z", "9"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("not basic; basic quotients {(Z(3),G_3Z(3))}"), std::string::npos);
  const CliRun q = hatq({"quotient", "--x", "3", "--k", "3", "--subgroup", "J"});
  EXPECT_EQ(q.code, 0);
  EXPECT_NE(q.out.find("C_6"), std::string::npos);
  EXPECT_NE(q.out.find("dihedral"), std::string::npos);
  EXPECT_EQ(hatq({"quotient", "--x", "3", "--k", "3", "--subgroup", "Q"}).code, 1);
}

TEST(CliTest, Orientations) {
  const CliRun r = hatq({"orientations", "--z", "3", "--y", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["graph"], "Y(3)");
  EXPECT_EQ(j["results"][0]["orientation_class_count"], 2);
  EXPECT_EQ(j["results"][1]["orientation_class_count"], 1);
}

TEST(CliTest, OutFile) {
  const std::string path = ::testing::TempDir() + "hatq_out.txt";
  const CliRun r = hatq({"validate", "--z", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("PASS (Z(3),G_3Z(3))"), std::string::npos);
}

TEST(CliTest, BasicJsonWitnessNames) {
  const GGPair p = build_pair({Family::X, 3, Orientation::K3});
  const Json j = basic_json(p, is_basic(p));
  EXPECT_FALSE(j["basic"].get<bool>());
  bool named = false;
  for (const auto& w : j["witnesses"])
    named = named || (w.contains("subgroup_name") && w["subgroup_name"] == "N(3)");
  EXPECT_TRUE(named);
}

}  // namespace
}  // namespace hat
