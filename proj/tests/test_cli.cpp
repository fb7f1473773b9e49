#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "complicial/io.hpp"

using namespace complicial;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const char* env = std::getenv("CLI_SCRATCH");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "complicial_cli_test";
  fs::create_directories(dir);
  return dir;
}

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

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("examples are listed and emitted") {
  const auto list = run({"examples", "--list"});
  CHECK(list.code == kExitOk);
  CHECK(list.out.find("SigmaI") != std::string::npos);
  const auto path = (scratch() / "sigma.json").string();
  CHECK(run({"examples", "--emit", "SigmaI", "--out", path}).code == kExitOk);
  CHECK_NOTHROW(category_from_json(read_json_file(path)));
}

TEST_CASE("nerve then check-fibrant on the natural nerve of the suspended isomorphism") {
  const auto dir = scratch();
  const auto nerve_path = (dir / "sigma_nat.json").string();
  REQUIRE(run({"nerve", "--example", "SigmaI", "--marking", "natural", "--dim", "4", "--out", nerve_path}).code ==
          kExitOk);
  const auto report = (dir / "sigma_report.json").string();
  const auto r = run({"check-fibrant", "--input", nerve_path, "--n", "2", "--report", report});
  CHECK(r.code == kExitOk);
  const auto j = read_json_file(report);
  CHECK(j["passed"].get<bool>());
  CHECK(j["extensions"].size() == 30);
}

TEST_CASE("a failing fibrancy check still exits cleanly with a replayable witness") {
  const auto dir = scratch();
  const auto nerve_path = (dir / "iso_rs.json").string();
  REQUIRE(run({"nerve", "--example", "I", "--marking", "rs", "--dim", "4", "--out", nerve_path}).code == kExitOk);
  const auto report = (dir / "iso_report.json").string();
  CHECK(run({"check-fibrant", "--input", nerve_path, "--report", report}).code == kExitOk);
  const auto j = read_json_file(report);
  CHECK_FALSE(j["passed"].get<bool>());
  bool witnessed = false;
  for (const auto& e : j["extensions"])
    if (!e["passed"].get<bool>()) witnessed = witnessed || e.contains("witness");
  CHECK(witnessed);
}

TEST_CASE("reports do not depend on the thread count") {
  const auto dir = scratch();
  const auto nerve_path = (dir / "o22.json").string();
  REQUIRE(run({"nerve", "--example", "O2[2]", "--dim", "4", "--out", nerve_path}).code == kExitOk);
  const auto a = (dir / "t1.json").string(), b = (dir / "t4.json").string();
  REQUIRE(run({"check-fibrant", "--input", nerve_path, "--threads", "1", "--report", a}).code == kExitOk);
  REQUIRE(run({"check-fibrant", "--input", nerve_path, "--threads", "4", "--report", b}).code == kExitOk);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("factorize writes a stage trace") {
  const auto dir = scratch() / "trace";
  fs::remove_all(dir);
  const auto r = run({"factorize", "--example", "OO2[2]", "--dim", "4", "--trace", dir.string()});
  CHECK(r.code == kExitOk);
  CHECK(fs::exists(dir / "summary.json"));
  std::size_t stages = 0;
  for (const auto& entry : fs::directory_iterator(dir)) stages += entry.path().filename() != "summary.json";
  CHECK(stages == 5);
  CHECK(read_json_file(dir / "summary.json")["passed"].get<bool>());
}

TEST_CASE("categorify and counit-check") {
  const auto dir = scratch();
  const auto nerve_path = (dir / "i_nat.json").string();
  REQUIRE(run({"nerve", "--example", "I", "--dim", "3", "--out", nerve_path}).code == kExitOk);
  const auto out = (dir / "i_pres.json").string();
  CHECK(run({"categorify", "--input", nerve_path, "--out", out}).code == kExitOk);
  CHECK_NOTHROW(polygraph_from_json(read_json_file(out)));
  const auto cat = (dir / "i_cat.json").string();
  REQUIRE(run({"examples", "--emit", "I", "--out", cat}).code == kExitOk);
  CHECK(run({"counit-check", "--cat", cat, "--dim", "4"}).code == kExitOk);
}

TEST_CASE("input errors exit with status 3") {
  CHECK(run({"nerve", "--input", (scratch() / "missing.json").string()}).code == kExitInput);
  CHECK(run({"nerve", "--example", "no-such-example"}).code == kExitInput);
  CHECK(run({"nerve", "--example", "I", "--dim", "9"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  const auto bad = scratch() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run({"categorify", "--input", bad.string()}).code == kExitInput);
}

TEST_CASE("an exhausted budget exits with status 2") {
  const auto dir = scratch();
  const auto nerve_path = (dir / "o23.json").string();
  REQUIRE(run({"nerve", "--example", "O2[3]", "--dim", "4", "--out", nerve_path}).code == kExitOk);
  ::setenv("COMPLICIAL_BUDGET", "5", 1);
  const auto r = run({"check-fibrant", "--input", nerve_path});
  ::unsetenv("COMPLICIAL_BUDGET");
  CHECK(r.code == kExitBudget);
}
