#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ekr/cli.hpp"

using namespace ekr;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ekr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ekr_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, CertifyQ7) {
  const CliRun r = run({"certify", "--q", "7", "--ell", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["hoffman_bound"]["num"], 672);
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["m"], 2);
  EXPECT_TRUE(j.contains("timestamp"));
}

TEST(Cli, InvalidConfigsExitTwo) {
  EXPECT_EQ(run({"certify", "--q", "7", "--ell", "2"}).code, 2);
  EXPECT_EQ(run({"certify", "--q", "9", "--ell", "3"}).code, 2);
  EXPECT_EQ(run({"certify", "--q", "19", "--ell", "3"}).code, 2);
  EXPECT_EQ(run({"certify", "--q", "7"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ReportEtaCsvHas48Rows) {
  const CliRun r = run({"report", "--q", "7", "--ell", "3", "eta", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 49u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "class,kind,param1,param2,size,eta,eta_burnside,eta_kernel,derangement,in_H");
}

TEST(Cli, ReportSpectrumMultiplicitiesSumToOrder) {
  const CliRun r = run({"report", "--q", "7", "--ell", "3", "spectrum"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::uint64_t total = 0;
  for (const auto& row : nlohmann::json::parse(r.out)) total += row["multiplicity"].get<std::uint64_t>();
  EXPECT_EQ(total, 2016u);
}

TEST(Cli, ReportErrors) {
  const CliRun xml = run({"report", "--q", "7", "--ell", "3", "eta", "--format", "xml"});
  EXPECT_EQ(xml.code, 2);
  EXPECT_NE(xml.err.find("json|csv|text"), std::string::npos);
  EXPECT_EQ(run({"report", "--q", "7", "--ell", "3", "nonsense"}).code, 2);
}

TEST(Cli, EveryTableRendersInEveryFormat) {
  for (const auto& name : table_names()) {
    for (const char* fmt : {"json", "csv", "text"}) {
      const CliRun r = run({"report", "--q", "7", "--ell", "3", name, "--format", fmt});
      EXPECT_EQ(r.code, 0) << name << " " << fmt << ": " << r.err;
      EXPECT_FALSE(r.out.empty());
    }
  }
  const CliRun eig = run({"report", "--q", "7", "--ell", "3", "eigentable", "--format", "csv"});
  EXPECT_EQ(count_lines(eig.out), 15u);
  EXPECT_NE(eig.out.find("2,96,56,294"), std::string::npos);
}

TEST(Cli, OutputsAreDeterministic) {
  const CliRun a = run({"report", "--q", "11", "--ell", "5", "characters", "--format", "csv"});
  const CliRun b = run({"report", "--q", "11", "--ell", "5", "characters", "--format", "csv"});
  EXPECT_EQ(a.out, b.out);
  auto ca = nlohmann::json::parse(run({"certify", "--q", "11", "--ell", "5"}).out);
  auto cb = nlohmann::json::parse(run({"certify", "--q", "11", "--ell", "5", "--threads", "1"}).out);
  ca.erase("timestamp");
  cb.erase("timestamp");
  EXPECT_EQ(ca.dump(), cb.dump());
}

TEST(Cli, OutFileAndCacheDir) {
  const auto out = temp_path("cert.json");
  const auto cache = temp_path("cache");
  const CliRun r = run({"certify", "--q", "27", "--ell", "13", "--out", out.string(), "--cache-dir", cache.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["hoffman_bound"]["num"], 39312);
  EXPECT_TRUE(std::filesystem::exists(field_cache_path(cache, 3, 3)));
  std::filesystem::remove(out);
  std::filesystem::remove_all(cache);
}

TEST(Cli, Bruteforce) {
  const CliRun ok = run({"bruteforce", "--q", "7", "--ell", "3", "--format", "csv"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out.find(",false"), std::string::npos);
  const CliRun guard = run({"bruteforce", "--q", "13", "--ell", "3"});
  EXPECT_EQ(guard.code, 2);
  EXPECT_NE(guard.err.find("--slow"), std::string::npos);
}

TEST(Cli, CertifyAll) {
  const CliRun r = run({"certify-all", "--max-q", "13", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("7,3,2,2016,672,672,true"), std::string::npos);
  EXPECT_NE(r.out.find("13,3,4,26208,8736,8736,true"), std::string::npos);
}
