#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "weavekit/cli.hpp"

using namespace weavekit;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "weavekit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("jones text") {
  Result r = invoke({"jones", "-n", "4", "--format", "text"});
  CHECK(r.code == kOk);
  CHECK(r.out == "t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1 + 6t^-2 - 4t^-3 + t^-4\n");
}

TEST_CASE("stats csv") {
  Result r = invoke({"stats", "-n", "10", "--format", "csv"});
  CHECK(r.code == kOk);
  CHECK(r.out == "n,total_dimension,dim_H01,sigma,L2,L1\n10,7563,970,2.64088,0.040510,0.134828\n");
}

TEST_CASE("verify-all") {
  Result r = invoke({"verify-all", "--max-n", "20"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("hecke json keys") {
  Result r = invoke({"hecke", "-n", "3", "--format", "json"});
  REQUIRE(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"C0", "C1", "C2", "C12", "C21"}) CHECK(j.contains(key));
}

TEST_CASE("oracle flag") {
  CHECK(invoke({"hecke", "-n", "5", "--oracle"}).code == kOk);
  CHECK(invoke({"jones", "-n", "5", "--oracle"}).code == kOk);
}

TEST_CASE("usage errors") {
  CHECK(invoke({"jones"}).code == kUsageError);
  CHECK(invoke({"nonsense", "-n", "4"}).code == kUsageError);
  CHECK(invoke({"jones", "-n", "4", "--format", "pdf"}).code == kUsageError);
  CHECK(invoke({"jones", "-n", "4", "--range", "1..3"}).code == kUsageError);
  CHECK(invoke({"jones", "--range", "5..2"}).code == kUsageError);
  CHECK(invoke({"jones", "-n", "0"}).code == kUsageError);
  CHECK(invoke({"jones", "--range", "1..4", "--format", "svg"}).code == kUsageError);
  CHECK(invoke({"khovanov", "-n", "6"}).code == kUsageError);
  CHECK(invoke({"correlate"}).code == kUsageError);
  CHECK(parse_range("3..9") == std::make_pair(3L, 9L));
  CHECK_FALSE(parse_range("3-9").has_value());
  CHECK(parse_command("integral-khovanov") == Command::kIntegralKhovanov);
  CHECK_FALSE(parse_command("foo").has_value());
}

TEST_CASE("io errors") {
  CHECK(invoke({"jones", "-n", "4", "--out", "/nonexistent-dir/x.txt"}).code == kIoError);
  CHECK(invoke({"correlate", "--volumes", "/nonexistent-dir/v.csv"}).code == kIoError);
  auto bad = temp_file("weavekit_bad_volumes.csv", "n;volume\n4;1\n");
  CHECK(invoke({"correlate", "--volumes", bad.string()}).code == kIoError);
  std::filesystem::remove(bad);
}

TEST_CASE("filtering of links is reported") {
  Result r = invoke({"khovanov", "--range", "4..7", "--format", "csv"});
  CHECK(r.code == kOk);
  CHECK(r.err.find("skipped 1") != std::string::npos);
  CHECK(r.out.rfind("n,i,j,dim\n", 0) == 0);
  CHECK(r.out.find("\n6,") == std::string::npos);
}

TEST_CASE("parallel runs are byte-identical") {
  for (const char* cmd : {"jones", "homfly", "stats", "khovanov"}) {
    Result a = invoke({cmd, "--range", "4..25", "--format", "json", "--jobs", "1"});
    Result b = invoke({cmd, "--range", "4..25", "--format", "json", "--jobs", "5"});
    CAPTURE(cmd);
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("output file") {
  auto p = std::filesystem::temp_directory_path() / "weavekit_cli_out.txt";
  Result r = invoke({"alexander", "-n", "4", "--out", p.string()});
  CHECK(r.code == kOk);
  CHECK(r.out.empty());
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  CHECK(line == "-t^3 + 5t^2 - 10t + 13 - 10t^-1 + 5t^-2 - t^-3");
  std::filesystem::remove(p);
}

TEST_CASE("svg output") {
  Result r = invoke({"khovanov", "-n", "4", "--format", "svg"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("<svg") != std::string::npos);
}

TEST_CASE("twist output") {
  Result plain = invoke({"twist", "-n", "20", "-k", "7"});
  Result conj = invoke({"twist", "-n", "20", "-k", "7", "--conjectural"});
  CHECK(plain.code == kOk);
  CHECK(conj.code == kOk);
  CHECK(plain.out.find("conjectur") == std::string::npos);
  CHECK(conj.out.find("conjectur") != std::string::npos);
}

TEST_CASE("correlate and bounds") {
  auto lin = temp_file("weavekit_lin.csv", "n,volume\n4,15\n5,23\n7,45\n8,59\n");
  Result r = invoke({"correlate", "--volumes", lin.string(), "-k", "2", "--format", "json"});
  CHECK(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pearson_r"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  Result b = invoke({"bounds", "--max-n", "12", "--format", "csv"});
  CHECK(b.code == kOk);
  CHECK(b.out.rfind("n,lower,upper,curve_k2,curve_k3,curve_k4,vol_rel\n", 0) == 0);
  std::filesystem::remove(lin);
}

TEST_CASE("precision digits") {
  setenv("WEAVEKIT_PRECISION_DIGITS", "3", 1);
  Result r = invoke({"stats", "-n", "10"});
  unsetenv("WEAVEKIT_PRECISION_DIGITS");
  CHECK(r.code == kOk);
  CHECK(r.out.find("2.64") != std::string::npos);
  CHECK(r.out.find("2.6408") == std::string::npos);
}

}  // TEST_SUITE
