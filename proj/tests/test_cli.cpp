#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#ifndef _WIN32
#include <sys/wait.h>
#endif

#ifndef LTVSIM_BINARY
#define LTVSIM_BINARY "ltvsim"
#endif

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

// Run the CLI binary with stdout+stderr captured to a file.
CommandResult run_cli(const std::string& args, const fs::path& workdir) {
  const fs::path capture = workdir / "cli_output.txt";
  const std::string command =
      std::string(LTVSIM_BINARY) + " " + args + " > " + capture.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  CommandResult result;
#ifdef _WIN32
  result.exit_code = raw;
#else
  result.exit_code = WEXITSTATUS(raw);
#endif
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  result.output = ss.str();
  return result;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ltv_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("list-examples names the built-ins") {
  const fs::path dir = fresh_dir("list");
  const CommandResult r = run_cli("list-examples", dir);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("example1") != std::string::npos);
  CHECK(r.output.find("example2-robustness") != std::string::npos);
}

TEST_CASE("check actions map verdicts to exit codes") {
  const fs::path dir = fresh_dir("verdicts");
  const CommandResult pass =
      run_cli("check-commute --config example1 --out " + (dir / "ok").string(), dir);
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("commutative: true") != std::string::npos);
  CHECK(fs::exists(dir / "ok" / "example1_ab.csv"));
  CHECK(fs::exists(dir / "ok" / "report.txt"));

  const CommandResult fail = run_cli(
      "check-commute --config example1-noncommutative --out " + (dir / "bad").string(), dir);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("commutative: false") != std::string::npos);
}

TEST_CASE("errors exit with code 2") {
  const fs::path dir = fresh_dir("errors");
  CHECK(run_cli("check-commute --config no-such-scenario --out " + dir.string(), dir).exit_code ==
        2);

  const fs::path broken = dir / "broken.json";
  std::ofstream(broken) << "{ not json";
  CHECK(run_cli("simulate --config " + broken.string() + " --out " + dir.string(), dir)
            .exit_code == 2);

  // config file referencing an unknown system label
  const fs::path dangling = dir / "dangling.json";
  std::ofstream(dangling) << R"json({"horizon": 5, "action": "simulate", "first": "Q",
    "systems": {"A": {"order": 1, "coefficients": ["1", "2"]}}, "input": "0"})json";
  const CommandResult r =
      run_cli("simulate --config " + dangling.string() + " --out " + dir.string(), dir);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("config files work alongside built-ins, with flag overrides") {
  const fs::path dir = fresh_dir("override");
  const fs::path cfg = dir / "own.json";
  std::ofstream(cfg) << R"json({
    "name": "own", "action": "simulate", "horizon": 40,
    "systems": {"A": {"order": 1, "coefficients": ["(k+1)^2", "exp(k)"], "initial_state": [2]}},
    "input": "unit_sample(0)"})json";

  const CommandResult r = run_cli(
      "simulate --config " + cfg.string() + " --out " + (dir / "o").string() + " --horizon 12",
      dir);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("horizon: 12") != std::string::npos);

  std::ifstream csv(dir / "o" / "own_output.csv");
  REQUIRE(csv);
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 14);  // header + 13 samples
}

TEST_CASE("missing required flags are a usage error") {
  const fs::path dir = fresh_dir("usage");
  const CommandResult r = run_cli("check-commute", dir);
  CHECK(r.exit_code != 0);
}
