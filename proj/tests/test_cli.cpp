// SPDX-License-Identifier: MIT
// End-to-end tests of the installed command-line binary (path injected by the
// build) plus direct tests of the command implementations.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtangle/reports.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args, const fs::path& stdout_file = {}) {
  std::string cmd = std::string(QTANGLE_CLI_PATH) + " " + args;
  if (stdout_file.empty())
    cmd += " > /dev/null 2>&1";
  else
    cmd += " > " + stdout_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("qtangle_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::istringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, delim)) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("global flags: version exits 0, missing subcommand exits 2") {
  CHECK(run_cli("--version") == 0);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("no-such-command") == 2);
}

TEST_CASE("grover-table writes the stage table and prints it") {
  const fs::path dir = fresh_dir("grover_default");
  const fs::path console = dir / "console.txt";
  CHECK(run_cli("grover-table --output-dir " + dir.string(), console) == 0);

  const std::string csv = slurp(dir / "grover_table.csv");
  const std::vector<std::string> lines = lines_of(csv);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "state,tau3,C_AB,C_AC,C_BC");
  const std::vector<std::string> row1 = split(lines[1], ',');
  REQUIRE(row1.size() == 5);
  CHECK(row1[0] == "psi1");
  CHECK(std::stod(row1[1]) == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(std::stod(row1[2]) == doctest::Approx(0.5).epsilon(1e-9));
  const std::vector<std::string> row4 = split(lines[4], ',');
  CHECK(row4[0] == "psi4");
  CHECK(std::stod(row4[1]) == doctest::Approx(9.0 / 256.0).epsilon(1e-9));
  CHECK(std::stod(row4[4]) == doctest::Approx(3.0 / 16.0).epsilon(1e-9));

  const nlohmann::json meta = nlohmann::json::parse(slurp(dir / "meta.json"));
  CHECK(meta.at("command") == "grover-table");
  CHECK(meta.at("flags").at("n") == 3);
  CHECK(meta.at("flags").at("target") == 7);
  CHECK(meta.at("flags").at("iterations") == 2);

  CHECK(slurp(console).find("psi1") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("grover-table with zero iterations reports only the uniform stage") {
  const fs::path dir = fresh_dir("grover_zero");
  CHECK(run_cli("grover-table --iterations 0 --output-dir " + dir.string()) == 0);
  const std::vector<std::string> lines = lines_of(slurp(dir / "grover_table.csv"));
  REQUIRE(lines.size() == 2);
  CHECK(split(lines[1], ',')[0] == "s");
  CHECK(std::stod(split(lines[1], ',')[1]) == 0.0);
  fs::remove_all(dir);
}

TEST_CASE("grover-table usage errors exit 2") {
  const fs::path dir = fresh_dir("grover_bad");
  CHECK(run_cli("grover-table --target 9 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("grover-table --n 2 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("grover-table --format xml --output-dir " + dir.string()) == 2);
  CHECK(run_cli("grover-table --iterations -3 --output-dir " + dir.string()) == 2);
  fs::remove_all(dir);
}

TEST_CASE("hhl-sweep writes both tangle tables deterministically") {
  const fs::path dir1 = fresh_dir("sweep_a");
  const fs::path dir2 = fresh_dir("sweep_b");
  CHECK(run_cli("hhl-sweep --grid-points 11 --output-dir " + dir1.string()) == 0);
  CHECK(run_cli("hhl-sweep --grid-points 11 --output-dir " + dir2.string()) == 0);

  const std::string a = slurp(dir1 / "fig4a.csv");
  const std::string b = slurp(dir1 / "fig4b.csv");
  CHECK(a == slurp(dir2 / "fig4a.csv"));
  CHECK(b == slurp(dir2 / "fig4b.csv"));
  CHECK(slurp(dir1 / "meta.json") == slurp(dir2 / "meta.json"));

  const std::vector<std::string> la = lines_of(a);
  REQUIRE(la.size() == 12);
  CHECK(la[0] == "b0_sq,tau3_psi1,tau3_rho2,tau3_rho3");
  const std::vector<std::string> first = split(la[1], ',');
  CHECK(std::stod(first[0]) == 0.0);
  CHECK(std::stod(first[1]) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<std::string> last = split(la[11], ',');
  CHECK(std::stod(last[0]) == 1.0);
  CHECK(std::stod(last[1]) == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<std::string> lb = lines_of(b);
  CHECK(lb[0] == "b0_sq,pi3_psi1,pi3_rho2,pi3_rho3");
  // every reported value is finite, non-negative, and at most 1
  for (size_t i = 1; i < lb.size(); ++i)
    for (const std::string& cell : split(lb[i], ','))
      CHECK(std::stod(cell) >= 0.0);

  const nlohmann::json meta = nlohmann::json::parse(slurp(dir1 / "meta.json"));
  CHECK(meta.at("flags").at("grid_points") == 11);
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("hhl-sweep tsv output uses tab delimiters") {
  const fs::path dir = fresh_dir("sweep_tsv");
  CHECK(run_cli("hhl-sweep --grid-points 3 --format tsv --output-dir " + dir.string()) == 0);
  const std::vector<std::string> lines = lines_of(slurp(dir / "fig4a.tsv"));
  CHECK(lines[0] == "b0_sq\ttau3_psi1\ttau3_rho2\ttau3_rho3");
  CHECK(split(lines[1], '\t').size() == 4);
  fs::remove_all(dir);
}

TEST_CASE("hhl-sweep usage errors exit 2 and output failures exit 1") {
  const fs::path dir = fresh_dir("sweep_bad");
  CHECK(run_cli("hhl-sweep --grid-points 1 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("hhl-sweep --c 0 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("hhl-sweep --c 1.5 --output-dir " + dir.string()) == 2);
  // a path through an existing regular file cannot become a directory
  const fs::path blocker = dir / "blocker";
  std::ofstream(blocker) << "x";
  CHECK(run_cli("hhl-sweep --output-dir " + (blocker / "sub").string()) == 1);
  fs::remove_all(dir);
}

TEST_CASE("rank2-curve writes the curve family with boundary markers") {
  const fs::path dir = fresh_dir("rank2");
  CHECK(run_cli("rank2-curve --x1 0.6 --theta-steps 8 --p-steps 11 --output-dir " +
                dir.string()) == 0);
  const std::vector<std::string> lines = lines_of(slurp(dir / "rank2_curves.csv"));
  CHECK(lines[0] == "p,theta,tau3_Z,f_p,convex_hull,is_p_bound");
  // 11 grid p values plus the two inserted bounds 0.36 and 0.64, 8 thetas each
  REQUIRE(lines.size() == 1 + 13 * 8);
  int bound_rows = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> cells = split(lines[i], ',');
    REQUIRE(cells.size() == 6);
    if (cells[5] == "1") {
      ++bound_rows;
      CHECK(std::stod(cells[3]) < 1e-10);  // f vanishes on the boundary
      CHECK(std::stod(cells[4]) == 0.0);   // so does the hull
    }
    CHECK(std::stod(cells[2]) >= std::stod(cells[3]) - 1e-12);  // curve >= its minimum
    CHECK(std::stod(cells[3]) >= std::stod(cells[4]) - 1e-12);  // minimum >= hull
  }
  CHECK(bound_rows == 2 * 8);
  fs::remove_all(dir);
}

TEST_CASE("rank2-curve usage errors exit 2") {
  const fs::path dir = fresh_dir("rank2_bad");
  CHECK(run_cli("rank2-curve --x1 1.5 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("rank2-curve --theta-steps 1 --output-dir " + dir.string()) == 2);
  CHECK(run_cli("rank2-curve --p-steps 1 --output-dir " + dir.string()) == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify passes end to end on a small grid") {
  const fs::path dir = fresh_dir("verify");
  const fs::path console = dir / "console.txt";
  CHECK(run_cli("verify --grid-points 3", console) == 0);
  const std::string text = slurp(console);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("verify: all checks passed") != std::string::npos);
  CHECK(run_cli("verify --c 1.5") == 2);
  CHECK(run_cli("verify --grid-points 1") == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify detects a closed-form parameterization mismatch") {
  qtangle::VerifyOptions opt;
  opt.grid_points = 3;
  opt.closed_form_c = 0.9;  // simulation keeps the default rotation constant
  std::ostringstream out;
  CHECK(qtangle::cmd_verify(opt, out) == 1);
  CHECK(out.str().find("FAIL") != std::string::npos);
}
