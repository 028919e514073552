#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fpd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FPD_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, ComputeJson) {
  const auto r = run({"compute", data("a3_loops_123.qv"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fpd"]["exact"], "3");
  EXPECT_EQ(j["spec"]["loop_counts"], (std::vector<int>{1, 2, 3}));
}

TEST(Cli, ComputeText) {
  const auto r = run({"compute", data("qnm_1_2.qv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fpd = 3/2 + 1/2*sqrt(5)"), std::string::npos) << r.out;
}

TEST(Cli, GeneratedFileMatchesFamily) {
  const auto file = run({"compute", data("a2_loops_12.qv"), "--json"});
  const auto fam = run({"family", "--type", "A", "--loops", "1,2", "--json"});
  ASSERT_EQ(file.code, 0) << file.err;
  ASSERT_EQ(fam.code, 0) << fam.err;
  const auto a = nlohmann::json::parse(file.out), b = nlohmann::json::parse(fam.out);
  EXPECT_EQ(a["fpd"], b["fpd"]);
  EXPECT_EQ(a["spec"], b["spec"]);
}

TEST(Cli, BadFileExitsTwo) {
  const auto r = run({"compute", data("bad.qv")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
  EXPECT_EQ(run({"compute", data("does_not_exist.qv")}).code, 2);
}

TEST(Cli, OracleAgreesWithThin) {
  const auto thin = run({"compute", data("a2_loops_12.qv"), "--json"});
  const auto oracle = run({"compute", data("a2_loops_12.qv"), "--json", "--mode", "oracle",
                           "--field", "3", "--max-dim", "4"});
  ASSERT_EQ(oracle.code, 0) << oracle.err;
  EXPECT_EQ(nlohmann::json::parse(thin.out)["fpd"], nlohmann::json::parse(oracle.out)["fpd"]);
}

TEST(Cli, FamilyQnm) {
  const auto r = run({"family", "--type", "Qnm", "--loops", "1,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["closed_form"]["match"], true);
  EXPECT_EQ(j["fpd"]["exact"], "3/2 + 1/2*sqrt(5)");
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(run({"family", "--type", "D", "--n", "3", "--loops", "0,0,0"}).code, 2);
  EXPECT_EQ(run({"family", "--type", "A", "--n", "3", "--loops", "0,0"}).code, 2);
  EXPECT_EQ(run({"family", "--type", "X", "--loops", "0"}).code, 2);
  EXPECT_EQ(run({"compute", data("qnm_1_2.qv"), "--max-dim", "4"}).code, 2);
  EXPECT_EQ(run({"compute", data("qnm_1_2.qv"), "--mode", "oracle", "--field", "5"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
}

TEST(Cli, VerifyQuick) {
  const auto r = run({"verify", "--quick"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--quick", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  for (const auto& c : j) EXPECT_EQ(c["passed"], true) << c.dump();
}
