#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::path("cli_scratch");
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int invocation = 0;
  const fs::path dir = scratch_dir();
  const fs::path out = dir / ("out" + std::to_string(invocation) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(invocation) + ".txt");
  ++invocation;
  const std::string cmd = std::string("\"") + T2R_CLI_PATH + "\" " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("spectrum text and json") {
  const CliResult text = run_cli("spectrum --n 3 --p 2 --method charpoly");
  CHECK(text.code == 0);
  CHECK(text.out.find("(x-6)(x-4)^3(x-2)^15x^29") != std::string::npos);
  CHECK(text.out.find('\x1b') == std::string::npos);  // no colors when piped

  const CliResult j = run_cli("spectrum --n 3 --p 2 --method charpoly --format json");
  CHECK(j.code == 0);
  const json parsed = json::parse(j.out);
  CHECK(parsed["factored"] == "(x-6)(x-4)^3(x-2)^15x^29");
  CHECK(parsed["eigenvalues"][0]["multiplicity"] == "1");
}

TEST_CASE("tvd single point and curve") {
  const CliResult single = run_cli("tvd --n 3 --p 2 --k 0");
  CHECK(single.code == 0);
  CHECK(single.out.find("47/48") != std::string::npos);

  const CliResult curve = run_cli("tvd --n 3 --p 2 --kmin 0 --kmax 10 --kstep 5 --format json");
  CHECK(curve.code == 0);
  const json parsed = json::parse(curve.out);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[2]["tv_exact_num"] == "341");
  CHECK(parsed[2]["tv_exact_den"] == "13122");

  const CliResult colorless = run_cli("tvd --n 4 --p 1 --k 8");
  CHECK(colorless.code == 0);
  CHECK(!colorless.err.empty());  // p = 1 note goes to stderr
}

TEST_CASE("exit codes") {
  CHECK(run_cli("--definitely-not-a-flag").code == 2);
  CHECK(run_cli("tvd --n 3 --p 2 --k -4").code == 2);
  CHECK(run_cli("spectrum --n 5 --p 2 --method charpoly").code == 3);  // 3840 over cap
  CHECK(run_cli("spectrum --n 3 --p 2 --method formula").code == 0);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("verify subcommand") {
  const CliResult r = run_cli("verify --n-max 2 --p-max 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find('\x1b') == std::string::npos);

  const CliResult suite = run_cli("verify --n-max 2 --p-max 2 --suite mixing");
  CHECK(suite.code == 0);
  CHECK(suite.out.find("tv-exact-vs-bruteforce") != std::string::npos);
}

TEST_CASE("cutoff grid and the empty-range warning") {
  const CliResult r = run_cli("cutoff --n 8 --p 2 --cmin 0 --cmax 1 --step 1");
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header == "k,c,tv_exact_num,tv_exact_den,tv_upper,tv_limit,threshold_A,mode");
  int rows = 0;
  for (std::string line; std::getline(is, line);) rows += !line.empty();
  CHECK(rows == 2);

  const CliResult empty = run_cli("cutoff --n 8 --p 2 --cmin 2 --cmax 1");
  CHECK(empty.code == 0);
  CHECK(!empty.err.empty());
  std::istringstream es(empty.out);
  REQUIRE(std::getline(es, header));
  CHECK(header == "k,c,tv_exact_num,tv_exact_den,tv_upper,tv_limit,threshold_A,mode");
  std::string rest;
  CHECK(!std::getline(es, rest));  // header only
}

TEST_CASE("simulate reruns are byte-identical and carry a manifest") {
  const fs::path dir = scratch_dir();
  const fs::path a = dir / "simA.csv";
  const fs::path b = dir / "simB.csv";
  const fs::path hist = dir / "hist.csv";
  const std::string common = "simulate --n 3 --p 2 --k 3 --trials 500 --seed 9 ";
  CHECK(run_cli(common + "--out " + a.string() + " --histogram " + hist.string()).code == 0);
  CHECK(run_cli(common + "--out " + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());

  std::istringstream hs(slurp(hist));
  int lines = 0;
  for (std::string line; std::getline(hs, line);) lines += !line.empty();
  CHECK(lines == 49);  // header + one row per group element

  const fs::path manifest = dir / "simA.csv.manifest.json";
  REQUIRE(fs::exists(manifest));
  const json m = json::parse(slurp(manifest));
  CHECK(m["command"] == "simulate");
  CHECK(m["rng_algorithm"] == "splitmix64/mulshift-v1");
  CHECK(m["parameters"]["seed"] == "9");
}

TEST_CASE("stirling table export") {
  const CliResult r = run_cli("stirling --kind second --kmin 3 --kmax 4 --amin 1 --amax 3");
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header == "k,a,value");
  CHECK(r.out.find("4,2,7") != std::string::npos);

  const CliResult menon = run_cli("stirling --menon-k 461 --menon-n 100");
  CHECK(menon.code == 0);
  CHECK(menon.out.find("lambda=") != std::string::npos);
  CHECK(menon.out.find("ratio=ok") != std::string::npos);
  CHECK(menon.out.find("gap=ok") != std::string::npos);

  const CliResult mode = run_cli("stirling --mode-k 100");
  CHECK(mode.code == 0);
  CHECK(mode.out.find("mode r_100 = 28") != std::string::npos);
}
