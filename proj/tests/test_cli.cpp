#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "lwcda/io.hpp"

namespace fs = std::filesystem;

namespace {

const char* cli_path() { return LWCDA_CLI_PATH; }

int run(const std::string& args) {
  const std::string command = std::string(cli_path()) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lwcda_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("aggregate runs end to end and is reproducible") {
  const fs::path out_a = fresh_dir("agg_a");
  const fs::path out_b = fresh_dir("agg_b");
  const std::string common =
      "aggregate --n 100 --gamma 60 --basis dct --seed 7 --out ";
  REQUIRE(run(common + out_a.string()) == 0);
  REQUIRE(run(common + out_b.string()) == 0);
  for (const char* name : {"topology.txt", "phi.txt", "summary.csv", "y.csv"}) {
    CHECK(lwcda::read_text_file(out_a / name) ==
          lwcda::read_text_file(out_b / name));
  }
}

TEST_CASE("invalid flags exit nonzero") {
  CHECK(run("aggregate --n 100 --gamma 60 --thr 0.4") != 0);
  CHECK(run("aggregate --basis fourier") != 0);
  CHECK(run("aggregate --deployment hexagonal") != 0);
  CHECK(run("definitely-not-a-command") != 0);
  CHECK(run("") != 0);  // a subcommand is required
}

TEST_CASE("coherence subcommand writes its csv") {
  const fs::path out = fresh_dir("coh");
  REQUIRE(run("coherence --n 64 --trials 1 --basis dwt --out " + out.string()) == 0);
  const std::string text = lwcda::read_text_file(out / "coherence_dwt.csv");
  CHECK(text.find("# schema=coherence.v1") == 0);
  CHECK(text.find("M,gamma,mu,trials") != std::string::npos);
}

TEST_CASE("config file values are applied and flags override them") {
  const fs::path dir = fresh_dir("cfg");
  const fs::path config_file = dir / "run.ini";
  lwcda::write_text_file(config_file,
                         "[network]\n"
                         "n = 49\n"
                         "[cs]\n"
                         "gamma = 50\n"
                         "[run]\n"
                         "seed = 11\n"
                         "out_dir = " + (dir / "from_file").string() + "\n");
  REQUIRE(run("aggregate --config " + config_file.string()) == 0);
  CHECK(fs::exists(dir / "from_file" / "summary.csv"));

  // flag overrides out_dir from the file
  REQUIRE(run("aggregate --config " + config_file.string() + " --out " +
              (dir / "flag_wins").string()) == 0);
  CHECK(fs::exists(dir / "flag_wins" / "summary.csv"));

  // malformed config reports the line and fails
  lwcda::write_text_file(config_file, "[network]\nn = \n");
  CHECK(run("aggregate --config " + config_file.string()) != 0);
}
