#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mudeg/cli.hpp"
#include "mudeg/lattice_cache.hpp"

using namespace mudeg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mudeg-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("mu") {
  CHECK(run({"mu", "G(4,4,3)", "--no-cache"}).out == "12\n");
  CHECK(run({"mu", "C4 x C4 x C4", "--no-cache"}).out == "12\n");
  CHECK(run({"mu", "C1", "--no-cache"}).out == "0\n");
  const Run cert = run({"mu", "S3", "--certificate", "--no-cache"});
  CHECK(cert.code == 0);
  CHECK(cert.out.find("certificate: 1 subgroup, degree 3, faithful") != std::string::npos);
}

TEST_CASE("mu json report") {
  const Run r = run({"--json", "mu", "G(2,2,3)", "--no-cache"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "mu");
  CHECK(j["inputs"]["expression"] == "G(2,2,3)");
  CHECK(j["checks"].empty());
  CHECK(j["result"]["mu"] == 4);
  CHECK(j["result"]["certificate"]["faithful"] == true);
  CHECK(!j.contains("wall_ms"));
}

TEST_CASE("order") {
  CHECK(run({"order", "C4 wr S3"}).out == "384\n");
  CHECK(run({"order", "S12"}).out == "479001600\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"mu", "G(4,3,3)"}).code == kExitInputError);
  CHECK(run({"mu", "G(4,4"}).code == kExitInputError);
  CHECK(run({"mu", "S7", "--no-cache"}).code == kExitCapExceeded);
  CHECK(run({"mu", "S5", "--max-order", "100", "--no-cache"}).code == kExitCapExceeded);
  CHECK(run({"mu", "S4", "--max-subgroups", "5", "--no-cache"}).code == kExitCapExceeded);
  CHECK(run({"enumerate", "/nonexistent/file.pres"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"mu"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"verify-paper", "--inject-fault", "x"}).code == kExitCheckFailed);
  CHECK(run({"verify-paper", "--inject-fault", "nonsense"}).code == kExitInputError);
  const Run cap = run({"mu", "S7", "--no-cache"});
  CHECK(cap.err.find("cap") != std::string::npos);
  const Run parse = run({"mu", "G(4,4"});
  CHECK(parse.err.find("position 5") != std::string::npos);
}

TEST_CASE("lattice with cache") {
  const auto dir = fresh_dir("lattice");
  const Run first = run({"lattice", "G(4,4,3)", "--normal-only", "--cache-dir", dir.string()});
  const Run second = run({"lattice", "G(4,4,3)", "--normal-only", "--cache-dir", dir.string()});
  CHECK(first.code == 0);
  CHECK(first.err.find("cache miss") != std::string::npos);
  CHECK(second.err.find("cache hit") != std::string::npos);
  CHECK(first.out == second.out);
  CHECK(first.out.find("5 normal subgroups") != std::string::npos);
  CHECK(first.out.find("(minimal)") == first.out.rfind("(minimal)"));

  const Run s3 = run({"lattice", "S3", "--cache-dir", dir.string()});
  CHECK(s3.out.find("6 subgroups in 4 conjugacy classes") != std::string::npos);
  const Run s3json = run({"--json", "lattice", "S3", "--cache-dir", dir.string()});
  CHECK(nlohmann::json::parse(s3json.out)["result"]["subgroups"] == 6);

  // a corrupted entry is rebuilt, not trusted
  const std::string key = lattice_cache_key("S3", Limits{});
  const auto path = LatticeCache(dir).path_for(key);
  REQUIRE(std::filesystem::exists(path));
  {
    std::ofstream f(path, std::ios::trunc);
    f << "{\"version\": 1, \"key\": \"S3\"}";
  }
  const Run again = run({"lattice", "S3", "--cache-dir", dir.string()});
  CHECK(again.err.find("cache miss") != std::string::npos);
  CHECK(again.out == s3.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify-paper") {
  const Run text = run({"verify-paper"});
  CHECK(text.code == 0);
  CHECK(text.out.find("13/13 passed") != std::string::npos);

  const Run a = run({"verify-paper", "--json"});
  const Run b = run({"verify-paper", "--json"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["totals"]["pass"] == 13);
  CHECK(j["checks"].size() == 13);
  CHECK(j["checks"][0]["id"] == "g443.order");
  CHECK(!j["checks"][0].contains("wall_ms"));
  const auto timed = nlohmann::json::parse(run({"verify-paper", "--json", "--timing"}).out);
  CHECK(timed["checks"][0].contains("wall_ms"));

  const Run fault = run({"verify-paper", "--json", "--inject-fault", "b"});
  const auto f = nlohmann::json::parse(fault.out);
  CHECK(f["checks"][1]["status"] == "fail");
  CHECK(!f["checks"][1]["witness"]["failing_relators"].empty());
}

TEST_CASE("hunt") {
  const Run r = run({"hunt", "--max-order", "400"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C4 wr S3 (order 384): G(4,4,3) x C4: mu = 12 < 16") != std::string::npos);
  CHECK(r.out.find("C3 wr S3 (order 162): no decomposition") != std::string::npos);
  CHECK(r.out.find("C5 wr S3") == std::string::npos);
  const Run wide = run({"hunt", "--max-order", "800"});
  CHECK(wide.out.find("C5 wr S3 (order 750): G(5,5,3) x C5: mu = 15 < 20") != std::string::npos);
}

TEST_CASE("enumerate") {
  const std::string dir = MUDEG_DATA_DIR;
  CHECK(run({"enumerate", dir + "/g443.pres"}).out == "index 96 (165 cosets defined)\n");
  CHECK(run({"enumerate", dir + "/g443_xy.pres"}).out.rfind("index 6", 0) == 0);
  CHECK(run({"enumerate", dir + "/g443.pres", "--max-cosets", "50"}).code == kExitCapExceeded);
  const auto j = nlohmann::json::parse(run({"--json", "enumerate", dir + "/g443.pres"}).out);
  CHECK(j["result"]["index"] == 96);
  CHECK(j["result"]["consistent"] == true);
}
