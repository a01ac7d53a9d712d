#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome crprime(const std::string& args) {
  std::string cmd = std::string(CRPRIME_EXE) + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return o;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("crprime_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json check(const nlohmann::json& report, const std::string& id) {
  for (const auto& c : report["checks"])
    if (c["id"] == id) return c;
  return nullptr;
}

}  // namespace

TEST(CliExit, HeisenbergPasses) {
  auto o = crprime("run heisenberg");
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_NE(o.out.find("0 fail"), std::string::npos);
}

TEST(CliExit, UsageErrors) {
  EXPECT_EQ(crprime("").code, 2);
  EXPECT_EQ(crprime("run").code, 2);
  EXPECT_EQ(crprime("run torus").code, 2);
  EXPECT_EQ(crprime("run heisenberg --order 3").code, 2);
  EXPECT_EQ(crprime("run heisenberg --format xml").code, 2);
  EXPECT_EQ(crprime("run heisenberg --grid many").code, 2);
  EXPECT_EQ(crprime("run moser --golden /nonexistent.json").code, 2);
  EXPECT_EQ(crprime("run heisenberg --config /nonexistent.cfg").code, 2);
  EXPECT_EQ(crprime("expand Q").code, 2);
  EXPECT_EQ(crprime("expand R --instance sphere").code, 2);
  EXPECT_EQ(crprime("--help").code, 0);
}

TEST(CliExit, BadConfigFile) {
  std::string cfg = temp_file("bad.cfg", "order = 8\ncolour = blue\n");
  EXPECT_EQ(crprime("run heisenberg --config " + cfg).code, 2);
}

TEST(CliConfig, FileThenOverrides) {
  std::string cfg = temp_file("good.cfg", "# test config\norder = 7\nseed = 3\nformat = json\n");
  auto o = crprime("run heisenberg --config " + cfg + " --seed 9");
  ASSERT_EQ(o.code, 0);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["config"]["order"], 7);
  EXPECT_EQ(j["config"]["seed"], 9);
}

TEST(CliReport, ByteIdenticalRuns) {
  for (const char* args : {"run heisenberg", "run heisenberg --format json", "run all --format json --seed 5"}) {
    auto a = crprime(args), b = crprime(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(CliReport, SortedUniqueIds) {
  auto o = crprime("run all --format json");
  auto j = nlohmann::json::parse(o.out);
  std::string prev;
  for (const auto& c : j["checks"]) {
    std::string id = c["id"];
    EXPECT_LT(prev, id);
    prev = id;
  }
  EXPECT_EQ(o.code, j["summary"]["fail"] == 0 ? 0 : 1);
}

TEST(CliReport, TimingsOnlyOnRequest) {
  EXPECT_EQ(crprime("run heisenberg --format json").out.find("runtime_s"), std::string::npos);
  EXPECT_NE(crprime("run heisenberg --format json --timings").out.find("runtime_s"), std::string::npos);
}

TEST(CliNegative, CorruptedGoldenFlipsLambda) {
  auto golden = nlohmann::json::parse(read(CRPRIME_GOLDEN_FILE));
  for (auto& ex : golden["expansions"])
    if (ex["id"] == "lambda") ex["terms"][0]["coef"] = {"0", "1", "2", "1"};
  std::string path = temp_file("corrupt.json", golden.dump());
  auto good = nlohmann::json::parse(crprime("run moser --format json").out);
  auto bad = crprime("run moser --format json --golden " + path);
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(check(good, "moser:golden.lambda")["status"], "pass");
  EXPECT_EQ(check(nlohmann::json::parse(bad.out), "moser:golden.lambda")["status"], "fail");
}

TEST(CliNegative, UnparsableGoldenFails) {
  std::string path = temp_file("broken.json", "{\"version\": 1, \"expansions\": [");
  auto o = crprime("run moser --format json --golden " + path);
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(check(nlohmann::json::parse(o.out), "moser:golden.parse")["status"], "fail");
}

TEST(CliNegative, WrongGreenPowerFailsLogGreenIdentity) {
  auto o = crprime("run heisenberg --format json --green-power 2");
  EXPECT_EQ(o.code, 1);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(check(j, "heisenberg:log_green.frame_identity")["status"], "fail");
}

TEST(CliNegative, WeightFourPerturbationDetected) {
  auto good = nlohmann::json::parse(crprime("run moser --format json").out);
  auto o = crprime("run moser --format json --perturb-weight4");
  EXPECT_EQ(o.code, 1);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(check(good, "moser:golden.curvature")["status"], "pass");
  EXPECT_EQ(check(j, "moser:golden.curvature")["status"], "fail");
}

TEST(CliExpand, AllQuantities) {
  for (const char* q : {"R", "A", "g", "lambda", "pe_tensor", "szego"}) {
    auto o = crprime(std::string("expand ") + q + " --order 7 --instance random");
    EXPECT_EQ(o.code, 0) << q;
    EXPECT_NE(o.out.find("engine:"), std::string::npos) << q;
  }
}

TEST(CliExpand, JsonTermList) {
  auto o = crprime("expand R --order 7 --instance flat --format json");
  ASSERT_EQ(o.code, 0);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["engine"], "0 + O(7)");
  EXPECT_EQ(j["agrees_with"], "printed");
  auto s = nlohmann::json::parse(crprime("expand szego --format json").out);
  EXPECT_EQ(s["agrees_with"], "closed_form");
}
