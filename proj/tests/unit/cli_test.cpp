#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "otto/commands.hpp"

namespace {

using nlohmann::json;
namespace cli = otto::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "otto");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(cli::format_number(0.2671839122089103), "0.267183912209");
  EXPECT_EQ(cli::format_number(0.5), "0.5");
  EXPECT_EQ(cli::format_number(0.0), "0");
}

TEST(SweepAxis, Validation) {
  EXPECT_NO_THROW((cli::SweepAxis{"r", 0.0, 6.0, 121}.validate()));
  EXPECT_NO_THROW((cli::SweepAxis{"r", 1.0, 1.0, 1}.validate()));
  EXPECT_THROW((cli::SweepAxis{"r", 0.0, 6.0, 1}.validate()), cli::UsageError);
  EXPECT_THROW((cli::SweepAxis{"r", 6.0, 0.0, 10}.validate()), cli::UsageError);
  EXPECT_THROW((cli::SweepAxis{"z", 0.0, 1.0, 10}.validate()), cli::UsageError);
  const auto v = cli::SweepAxis{"r", 0.0, 1.0, 5}.values();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_DOUBLE_EQ(v[1], 0.25);
  EXPECT_DOUBLE_EQ(v.back(), 1.0);
}

TEST(Csv, Layout) {
  cli::Table t{{"a", "b"}, {{1.0, 0.5}, {2.0, 0.25}}};
  EXPECT_EQ(cli::to_csv(t), "a,b\n1,0.5\n2,0.25\n");
}

TEST(Eval, ExampleEngine) {
  const auto r = invoke({"eval", "--w1", "1", "--w2", "2", "--b1", "2", "--b2", "0.2"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["mode"], "engine");
  EXPECT_NEAR(j["eta"].get<double>(), 0.2671839122089103, 1e-15);
  EXPECT_NEAR(j["lambda"].get<double>(), 1.25, 1e-15);
  EXPECT_EQ(j["tool_version"], cli::kToolVersion);
}

TEST(Eval, UsageErrors) {
  EXPECT_EQ(invoke({"eval", "--w1", "2", "--w2", "1", "--b1", "2", "--b2", "0.2"}).code,
            cli::kUsageError);
  EXPECT_EQ(invoke({"eval", "--w1", "1", "--w2", "2", "--b1", "2", "--b2", "0.2", "--r", "-1"})
                .code,
            cli::kUsageError);
  EXPECT_EQ(invoke({"eval", "--w1", "1"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({}).code, cli::kUsageError);
  const auto bad = invoke({"eval", "--w1", "2", "--w2", "1", "--b1", "2", "--b2", "0.2"});
  EXPECT_EQ(json::parse(bad.out)["error"]["kind"], "usage");
}

TEST(Eval, OverflowIsDomainFailure) {
  const auto r = invoke({"eval", "--w1", "1", "--w2", "2", "--b1", "1000", "--b2", "1", "--r", "1",
                         "--placement", "cold"});
  EXPECT_EQ(r.code, cli::kDomainFailure);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "domain");
}

TEST(Fig2, DefaultShape) {
  const auto r = invoke({"fig2"});
  ASSERT_EQ(r.code, cli::kSuccess);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "r,eta_c,eta_up,eta_mw,eta_c_gen");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 3u * 121u);
}

TEST(Fig2, JsonRows) {
  const auto r = invoke({"fig2", "--eta-c", "0.2", "--r-start", "1", "--r-stop", "1", "--count",
                         "1", "--format", "json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 1u);
  EXPECT_NEAR(j["rows"][0]["eta_up"].get<double>(), 0.22387738483056396, 1e-11);
  EXPECT_NEAR(j["rows"][0]["eta_mw"].get<double>(), 0.2189517832537392, 1e-11);
}

TEST(Fig2, OutOfRangeCarnotIsUsageError) {
  const auto r = invoke({"fig2", "--eta-c", "1.5"});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "usage");
}

TEST(Fig3, Deterministic) {
  const auto a = invoke({"fig3"});
  const auto b = invoke({"fig3"});
  ASSERT_EQ(a.code, cli::kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("eta_c,eta_up_th,eta_rk,half_eta_c\n", 0), 0u);
}

TEST(Fridge, FeasibleAndInfeasible) {
  const auto ok = invoke({"fridge", "--tau", "0.6666666666666666"});
  ASSERT_EQ(ok.code, cli::kSuccess) << ok.err;
  const json j = json::parse(ok.out);
  EXPECT_TRUE(j["cooling_feasible"].get<bool>());
  EXPECT_NEAR(j["zeta_up"].get<double>(), 0.0717967697244908, 1e-12);

  const auto bad = invoke({"fridge", "--tau", "0.5"});
  ASSERT_EQ(bad.code, cli::kSuccess);
  const json k = json::parse(bad.out);
  EXPECT_FALSE(k["cooling_feasible"].get<bool>());
  EXPECT_NEAR(k["r_window"]["upper"].get<double>(), 0.6584789484624084, 1e-15);

  EXPECT_EQ(invoke({"fridge", "--tau", "1.5"}).code, cli::kUsageError);
}

TEST(Verify, UnknownSuiteIsUsageError) {
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense"}).code, cli::kUsageError);
}

TEST(Verify, IdentitiesPass) {
  const auto r = invoke({"verify", "--suite", "identities"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
}

}  // namespace
