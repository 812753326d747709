#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "evanwave/layered.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

std::string cli_path() {
  const char* path = std::getenv("EVANWAVE_CLI_PATH");
  REQUIRE_MESSAGE(path != nullptr, "EVANWAVE_CLI_PATH must point at the CLI binary");
  return path;
}

// Scratch directory removed when the test case ends.
struct TempDir {
  fs::path path;

  TempDir() {
    std::string name = (fs::temp_directory_path() / "evanwave_cli_XXXXXX").string();
    REQUIRE(::mkdtemp(name.data()) != nullptr);
    path = name;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run_cli(const std::string& args, const fs::path& out, const fs::path& err) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

json dispersion_config(std::size_t count) {
  return json{{"mode", {{"a", kPi}, {"b", kPi}, {"n1", 1}, {"n2", 1}}},
              {"omega", {{"start", 0.5}, {"stop", 10.0}, {"count", count}}}};
}

json ftir_config(double theta0) {
  return json{{"stack",
               {{"entry", {{"n", 1.5}}},
                {"layers", json::array({{{"n", 1.0}, {"d", 1.0}}})},
                {"exit", {{"n", 1.5}}}}},
              {"omega", 2.0 * kPi},
              {"theta0", theta0},
              {"gap",
               {{"start", 0.1},
                {"stop", 10.0},
                {"count", 40},
                {"spacing", "log"}}}};
}

json wkb_config() {
  const std::size_t n = 301;
  json v = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -1.0 + 3.0 * static_cast<double>(i) / 300.0;
    v.push_back(x >= 0.0 && x <= 1.0 ? 1.0 : 0.0);
  }
  return json{{"potential",
               {{"grid", {{"x_min", -1.0}, {"x_max", 2.0}, {"n", n}}},
                {"V", std::move(v)}}},
              {"energy", 0.5},
              {"d_e", 1e-4}};
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') {
      ++lines;
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("dispersion subcommand writes a deterministic CSV table") {
  TempDir dir;
  const fs::path cfg = dir.path / "scan.json";
  const fs::path out = dir.path / "table.csv";
  const fs::path err = dir.path / "stderr.txt";
  write_file(cfg, dispersion_config(20).dump());

  const int code = run_cli("dispersion --config \"" + cfg.string() + "\" --out \"" +
                               out.string() + "\"",
                           dir.path / "stdout.txt", err);
  CHECK(code == 0);
  const std::string csv = slurp(out);
  CHECK(count_lines(csv) == 21);
  CHECK(csv.rfind("omega,omega_c,k_re,k_im,v_p,v_g\n", 0) == 0);

  // Below cutoff sqrt(2) the velocity cells stay empty.
  CHECK(csv.find("\n0.5,") != std::string::npos);
  const std::size_t below = csv.find("\n1,");
  REQUIRE(below != std::string::npos);
  const std::size_t below_end = csv.find('\n', below + 1);
  const std::string below_row = csv.substr(below + 1, below_end - below - 1);
  CHECK(below_row.substr(below_row.size() - 2) == ",,");

  // Identical inputs must give byte-identical output.
  const fs::path out2 = dir.path / "table2.csv";
  CHECK(run_cli("dispersion --config \"" + cfg.string() + "\" --out \"" +
                    out2.string() + "\"",
                dir.path / "stdout.txt", err) == 0);
  CHECK(slurp(out2) == csv);
}

TEST_CASE("dispersion subcommand emits JSON with nulls below cutoff") {
  TempDir dir;
  const fs::path cfg = dir.path / "scan.json";
  const fs::path out = dir.path / "table.json";
  write_file(cfg, dispersion_config(20).dump());

  const int code = run_cli("dispersion --format json --config \"" + cfg.string() +
                               "\" --out \"" + out.string() + "\"",
                           dir.path / "stdout.txt", dir.path / "stderr.txt");
  CHECK(code == 0);
  const json table = json::parse(slurp(out));
  CHECK(table.at("columns").at(0) == "omega");
  REQUIRE(table.at("rows").size() == 20);
  CHECK(table.at("rows").at(0).at(4).is_null());   // omega = 0.5 < cutoff
  CHECK(table.at("rows").at(19).at(4).is_number()); // omega = 10 > cutoff
}

TEST_CASE("a two-point range produces exactly two rows") {
  TempDir dir;
  const fs::path cfg = dir.path / "scan.json";
  const fs::path out = dir.path / "table.csv";
  write_file(cfg, dispersion_config(2).dump());
  CHECK(run_cli("dispersion --config \"" + cfg.string() + "\" --out \"" +
                    out.string() + "\"",
                dir.path / "stdout.txt", dir.path / "stderr.txt") == 0);
  CHECK(count_lines(slurp(out)) == 3);
}

TEST_CASE("malformed config exits with the config code and writes nothing") {
  TempDir dir;
  const fs::path cfg = dir.path / "broken.json";
  const fs::path out = dir.path / "table.csv";
  write_file(cfg, "{ this is not json");

  const int code = run_cli("dispersion --config \"" + cfg.string() + "\" --out \"" +
                               out.string() + "\"",
                           dir.path / "stdout.txt", dir.path / "stderr.txt");
  CHECK(code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(slurp(dir.path / "stderr.txt").find("config error") != std::string::npos);
}

TEST_CASE("missing required options and unknown subcommands exit with 2") {
  TempDir dir;
  CHECK(run_cli("dispersion", dir.path / "stdout.txt", dir.path / "stderr.txt") == 2);
  CHECK(run_cli("bogus", dir.path / "stdout.txt", dir.path / "stderr.txt") == 2);
}

TEST_CASE("tir subcommand reports the critical angle on stderr") {
  TempDir dir;
  const fs::path err = dir.path / "stderr.txt";
  const json cfg{{"n1", 1.5},
                 {"n2", 1.0},
                 {"omega", 1.0},
                 {"theta", {{"start", 0.0}, {"stop", 1.5}, {"count", 16}}}};
  write_file(dir.path / "tir.json", cfg.dump());
  CHECK(run_cli("tir --config \"" + (dir.path / "tir.json").string() + "\"",
                dir.path / "stdout.txt", err) == 0);
  CHECK(slurp(err).find("theta_c=0.729728") != std::string::npos);
  CHECK(slurp(dir.path / "stdout.txt")
            .rfind("theta0,theta2_re,theta2_im,abs_r,depth\n", 0) == 0);

  json reversed = cfg;
  reversed["n1"] = 1.0;
  reversed["n2"] = 1.5;
  write_file(dir.path / "rev.json", reversed.dump());
  CHECK(run_cli("tir --config \"" + (dir.path / "rev.json").string() + "\"",
                dir.path / "stdout.txt", err) == 0);
  CHECK(slurp(err).find("theta_c=none") != std::string::npos);
}

TEST_CASE("tir rejects a nonphysical index with the domain exit code") {
  TempDir dir;
  const json cfg{{"n1", -1.0},
                 {"n2", 1.0},
                 {"omega", 1.0},
                 {"theta", {{"start", 0.0}, {"stop", 1.5}, {"count", 16}}}};
  write_file(dir.path / "tir.json", cfg.dump());
  CHECK(run_cli("tir --config \"" + (dir.path / "tir.json").string() + "\"",
                dir.path / "stdout.txt", dir.path / "stderr.txt") == 3);
}

TEST_CASE("ftir subcommand warns when the gap is not evanescent") {
  TempDir dir;
  const fs::path err = dir.path / "stderr.txt";
  write_file(dir.path / "ftir.json", ftir_config(0.1).dump());
  CHECK(run_cli("ftir --config \"" + (dir.path / "ftir.json").string() + "\"",
                dir.path / "stdout.txt", err) == 0);
  CHECK(slurp(err).find("warning: gap propagates at theta0=0.100000") !=
        std::string::npos);
}

TEST_CASE("ftir subcommand summarises delay saturation for a tunnelling gap") {
  TempDir dir;
  const fs::path err = dir.path / "stderr.txt";
  const double theta0 = std::asin(2.0 / 3.0) + 0.1;
  write_file(dir.path / "ftir.json", ftir_config(theta0).dump());
  CHECK(run_cli("ftir --config \"" + (dir.path / "ftir.json").string() + "\"",
                dir.path / "stdout.txt", err) == 0);
  const std::string log = slurp(err);
  CHECK(log.find("saturation: tau_g(d=10)=") != std::string::npos);
  CHECK(log.find("warning") == std::string::npos);
}

TEST_CASE("wkb subcommand reports the barrier decomposition as JSON") {
  TempDir dir;
  write_file(dir.path / "wkb.json", wkb_config().dump());
  const fs::path out = dir.path / "stdout.txt";
  CHECK(run_cli("wkb --config \"" + (dir.path / "wkb.json").string() + "\"", out,
                dir.path / "stderr.txt") == 0);
  const json report = json::parse(slurp(out));
  REQUIRE(report.at("regions").size() == 3);
  const auto& barrier = report.at("regions").at(1);
  CHECK(barrier.at("kind") == "forbidden");
  CHECK(barrier.at("damping_factor").get<double>() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  CHECK(barrier.at("imaginary_time_lapse").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("verify subcommand passes clean and fails under the branch fault") {
  TempDir dir;
  const fs::path out = dir.path / "stdout.txt";
  CHECK(run_cli("verify", out, dir.path / "stderr.txt") == 0);
  const std::string report = slurp(out);
  CHECK(report.find("PASS") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);

  CHECK(run_cli("verify --inject-branch-fault", out, dir.path / "stderr.txt") == 1);
  CHECK(slurp(out).find("FAIL") != std::string::npos);
}
