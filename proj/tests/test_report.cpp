#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circsym/circulant.hpp"
#include "circsym/error.hpp"
#include "circsym/report.hpp"

using namespace circsym;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const char* exe = std::getenv("CIRCSYM_CLI");
  if (exe == nullptr) return {};
  const std::string command = std::string(exe) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

#define REQUIRE_CLI()                                                  \
  if (std::getenv("CIRCSYM_CLI") == nullptr) GTEST_SKIP() << "CIRCSYM_CLI not set"

Json analyze_spec(int n, const char* tokens, bool verify) {
  ReportOptions options;
  options.verify = verify;
  bool ok = false;
  Json doc = analyze(Subject::circulant(parse_connection_set(n, tokens)), options, ok);
  doc["__ok"] = ok;
  return doc;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Analyze, TwinsExample) {
  const Json doc = analyze_spec(8, "±1,±3,4", true);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["input"]["canonical"], "C_8(1,3,4,5,7)");
  EXPECT_EQ(doc["twins"]["kind"], "adjacent");
  EXPECT_EQ(doc["twins"]["class_size"], 2);
  EXPECT_EQ(doc["twins"]["w"], 4);
  EXPECT_EQ(doc["quotient_chain"]["steps"].size(), 3U);
  EXPECT_EQ(doc["quotient_chain"]["terminal_order"], 1);
  EXPECT_EQ(doc["group"]["order"], "128");
  EXPECT_EQ(doc["symmetry"]["det"]["value"], 4);
  EXPECT_EQ(doc["symmetry"]["det"]["method"], "Cor-DetTwins");
  EXPECT_EQ(doc["symmetry"]["dist"]["value"], 3);
  EXPECT_EQ(doc["symmetry"]["dist"]["method"], "Thm-DistTwins");
  EXPECT_TRUE(doc["verification"]["all_ok"].get<bool>());
  EXPECT_TRUE(doc["__ok"].get<bool>());
  for (const auto& claim : doc["verification"]["claims"]) EXPECT_NE(claim["status"], "fail") << claim.dump();
}

TEST(Analyze, CoTwinExample) {
  const Json doc = analyze_spec(14, "±1,±2,±3", true);
  EXPECT_EQ(doc["group"]["order"], "28");
  EXPECT_EQ(doc["group"]["expression"], "D_14");
  EXPECT_EQ(doc["symmetry"]["det"]["value"], 2);
  EXPECT_EQ(doc["symmetry"]["dist"]["value"], 2);
  EXPECT_EQ(doc["cotwins"]["kind"], "nonadjacent");
  EXPECT_TRUE(doc["__ok"].get<bool>());
}

TEST(Analyze, TwinFreeFallsToOracle) {
  const Json doc = analyze_spec(8, "±1,±2,4", false);
  EXPECT_EQ(doc["twins"]["kind"], "none");
  EXPECT_EQ(doc["cotwins"]["kind"], "none");
  EXPECT_EQ(doc["group"]["method"], "oracle");
  EXPECT_EQ(doc["symmetry"]["det"]["method"], "exhaustive");
  EXPECT_FALSE(doc.contains("verification"));
}

TEST(Analyze, WarnsOnNonTransitiveInput) {
  Subject s;
  s.graph = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  s.name = "P4";
  bool ok = false;
  const Json doc = analyze(s, ReportOptions{true, {}}, ok);
  ASSERT_TRUE(doc.contains("warnings"));
  EXPECT_EQ(doc["group"]["method"], "oracle");
  EXPECT_EQ(doc["group"]["order"], "2");
  EXPECT_EQ(doc["symmetry"]["det"]["method"], "exhaustive");
  EXPECT_TRUE(ok);
  bool ok_circ = false;
  EXPECT_FALSE(analyze(Subject::circulant(parse_connection_set(6, "±1")), {}, ok_circ).contains("warnings"));
}

TEST(Analyze, NamedGraph) {
  bool ok = false;
  const Json doc = analyze(Subject::named("icosahedron"), ReportOptions{true, {}}, ok);
  EXPECT_EQ(doc["group"]["order"], "120");
  EXPECT_EQ(doc["symmetry"]["det"]["value"], 3);
  EXPECT_TRUE(ok);
}

TEST(Reports, ErrorDocument) {
  const Json doc = error_document(Error(ErrorCode::kZeroGenerator, "zero"), "8 0");
  EXPECT_EQ(doc["error"]["code"], "ZeroGenerator");
  EXPECT_EQ(doc["error"]["instance"], "8 0");
  EXPECT_EQ(doc["schema"], 1);
}

TEST(Reports, CotwinAndAutgroup) {
  const Subject q3 = Subject::named("Q3");
  const Json cot = cotwin_report(q3, ReportOptions{true, {}});
  EXPECT_EQ(cot["cotwins"]["kind"], "nonadjacent");
  EXPECT_EQ(cot["cotwins"]["crown_k"], 4);
  EXPECT_EQ(cot["cotwins"]["kappa_image"], 24);
  EXPECT_TRUE(cot["cotwins"]["kernel_is_swap"].get<bool>());
  const Json aut = autgroup_report(Subject::circulant(parse_connection_set(18, "±2,±3,±4,±8")), {}, false);
  EXPECT_EQ(aut["group"]["order"], "2592");
  EXPECT_EQ(aut["group"]["stabilizer_order"], "144");
  const Json listed = autgroup_report(Subject::circulant(parse_connection_set(4, "±1")), {}, true);
  EXPECT_EQ(listed["group"]["elements"].size(), 8U);
}

TEST(Corpus, SmallRunHasNoMismatches) {
  const CorpusSummary s = verify_corpus(12, {});
  EXPECT_TRUE(s.mismatches.empty());
  EXPECT_GT(s.checks, s.graphs);
  const Json j = corpus_json(s, 12);
  EXPECT_EQ(j["mismatches"].size(), 0U);
}

TEST(Cli, AnalyzeVerifyExitsZero) {
  REQUIRE_CLI();
  const CliRun r = cli("analyze 8 ±1,±3,4 --verify --json");
  EXPECT_EQ(r.status, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["group"]["order"], "128");
  EXPECT_TRUE(doc["verification"]["all_ok"].get<bool>());
}

TEST(Cli, ValidationErrorsAreJson) {
  REQUIRE_CLI();
  const CliRun r = cli("analyze 8 1");
  EXPECT_EQ(r.status, 2);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["error"]["code"], "NotInverseClosed");
  const CliRun zero = cli("analyze 8 0,±1");
  EXPECT_EQ(zero.status, 2);
  EXPECT_EQ(Json::parse(zero.out)["error"]["code"], "ZeroGenerator");
}

TEST(Cli, Deterministic) {
  REQUIRE_CLI();
  const CliRun a = cli("analyze 12 ±1,±5,6 --json --verify");
  const CliRun b = cli("analyze 12 ±1,±5,6 --json --verify");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(cli("catalog table1").out, cli("catalog table1").out);
}

TEST(Cli, QuotientSequenceDot) {
  REQUIRE_CLI();
  const auto dir = std::filesystem::temp_directory_path() / "circsym_dot_test";
  std::filesystem::remove_all(dir);
  const CliRun r = cli("quotient-seq 8 ±1,±3,4 --json --dot " + dir.string());
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["quotient_chain"]["steps"].size(), 3U);
  for (int i = 0; i <= 3; ++i) {
    const auto file = dir / ("step_" + std::to_string(i) + ".dot");
    ASSERT_TRUE(std::filesystem::exists(file)) << file;
    EXPECT_EQ(read_file(file).rfind("graph", 0), 0U);
  }
  std::filesystem::remove_all(dir);
}

TEST(Cli, CatalogJobs) {
  REQUIRE_CLI();
  const CliRun orders = cli("catalog cotwin-orders --max-n 14 --json");
  EXPECT_EQ(orders.status, 0);
  EXPECT_NO_THROW(Json::parse(orders.out));
  const CliRun fam = cli("catalog twin-class-families --n 30 --w 6 --json");
  EXPECT_EQ(fam.status, 0);
  EXPECT_EQ(Json::parse(fam.out)["specs"].size(), 7U);
  const CliRun corpus = cli("verify-corpus --max-n 10");
  EXPECT_EQ(corpus.status, 0);
}
