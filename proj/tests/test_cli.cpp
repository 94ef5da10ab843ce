#include "minkprob/grid.hpp"
#include "minkprob/measure.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace minkprob;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("minkprob_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(const std::string& args) {
  const std::string cmd = std::string(MINKPROB_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json report(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "report.json")); }

}  // namespace

TEST_CASE("solve the quadratic preset") {
  const auto dir = scratch("quadratic");
  REQUIRE(run("solve --preset quadratic --out " + dir.string()) == 0);
  const auto r = report(dir);
  CHECK(r["converged"].get<bool>());
  CHECK(r["sup_error"].get<double>() < 1e-3);

  // the written solution reads back to the same measure
  const auto dir2 = scratch("quadratic_ma");
  REQUIRE(run("ma --input " + (dir / "solution.csv").string() + " --out " + dir2.string()) == 0);
  std::ifstream in(dir / "solution.csv");
  const auto h = read_function_csv(in);
  CHECK(report(dir2)["total"].get<double>() == doctest::Approx(ma_measure(h).total()).epsilon(1e-12));
}

TEST_CASE("an affine function has zero Monge-Ampere measure") {
  const auto dir = scratch("affine");
  const auto h = PLFunctionB::sample(make_grid(12, 24, 0.9), [](const BallPoint& x) { return 0.3 - x[0] + 2.0 * x[1]; });
  {
    std::ofstream out(dir / "affine.csv");
    write_function_csv(out, h);
  }
  REQUIRE(run("ma --input " + (dir / "affine.csv").string() + " --out " + dir.string()) == 0);
  CHECK(std::abs(report(dir)["total"].get<double>()) < 1e-12);
}

TEST_CASE("outputs are deterministic") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  REQUIRE(run("solve --preset dirac --out " + a.string()) == 0);
  REQUIRE(run("solve --preset dirac --out " + b.string()) == 0);
  CHECK(slurp(a / "solution.csv") == slurp(b / "solution.csv"));
  CHECK(slurp(a / "report.json") == slurp(b / "report.json"));
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  CHECK(run("") != 0);
  CHECK(run("solve --bogus") == 2);
  CHECK(run("solve --preset nonsense --out " + dir.string()) == 2);
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{\"grid\": {\"angular\": \"many\"}}";
  }
  CHECK(run("solve --spec " + (dir / "bad.json").string() + " --out " + dir.string()) == 2);
  {
    std::ofstream broken(dir / "broken.json");
    broken << "{\"grid\": ";
  }
  CHECK(run("solve --spec " + (dir / "broken.json").string() + " --out " + dir.string()) == 2);
  CHECK(run("solve --preset quadratic --tol 1e-14 --out " + dir.string()) == 3);
  CHECK(run("solve-eq --spec /dev/null --out " + dir.string()) == 2);
  CHECK(run("pogorelov --d 2 --k 1 --out " + dir.string()) == 2);
}
