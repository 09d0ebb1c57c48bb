#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "abring/config.hpp"
#include "abring/numerics.hpp"
#include "abring/sweep.hpp"

using namespace abring;

namespace {

const char* kSmallSweep = R"([physical]
delta = 0.1
v1 = 20
phi_ab = 1
[grid]
r_points = 1024
k_points = 1024
convergence_check = false
[sweep]
n:m = 0:0, 1:1
b_field = 0.5, 1, 100
)";

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("energy table layout") {
  const auto cfg = parse_config(kSmallSweep);
  const auto rows = run_energy(cfg);
  REQUIRE(rows.size() == 6);
  const auto csv = format_energy(rows, OutputFormat::Csv);
  CHECK(csv.rfind("n,m,B,xi,alpha,delta,v1,energy,epsilon,exists\n", 0) == 0);
  CHECK(count_lines(csv) == 7);
  const auto json = nlohmann::json::parse(format_energy(rows, OutputFormat::Json));
  CHECK(json["command"] == "energy");
  CHECK(json["rows"].size() == 6);
  CHECK(json["rows"][0]["exists"] == true);
}

TEST_CASE("entropy table layout and graceful skipping") {
  const auto cfg = parse_config(kSmallSweep);
  const auto rows = run_entropy(cfg);
  REQUIRE(rows.size() == 6);
  // The strongest field leaves no bound state; those rows stay empty.
  CHECK_FALSE(rows[2].result);
  CHECK(rows[2].failure == ErrorKind::NoBoundState);
  CHECK(rows[0].result);
  const auto csv = format_entropy(rows, OutputFormat::Csv);
  CHECK(csv.rfind("n,m,B,phi_ab,alpha,s_r,s_k,sum,pass\n", 0) == 0);
  CHECK(csv.find("\n0,0,100,1,1,,,,\n") != std::string::npos);
  CHECK(entropy_exit_code(rows) == 0);

  const auto json = nlohmann::json::parse(format_entropy(rows, OutputFormat::Json));
  const auto& report = json["rows"][0]["report"];
  for (const char* key : {"s_r", "s_k", "sum", "bbm_bound", "margin", "pass", "norm_residual_r", "norm_residual_k"}) {
    CHECK(report.contains(key));
  }
  CHECK(report.size() == 8);
}

TEST_CASE("exit code summarizes the rows") {
  std::vector<EntropyRow> rows(2);
  rows[0].failure = ErrorKind::NoBoundState;
  rows[1].failure = ErrorKind::NoBoundState;
  CHECK(entropy_exit_code(rows) == 3);
  rows[1].failure = ErrorKind::Numerical;
  CHECK(entropy_exit_code(rows) == 4);
  rows[1].failure.reset();
  rows[1].result = PipelineResult{};
  CHECK(entropy_exit_code(rows) == 0);
}

TEST_CASE("output does not depend on the worker count") {
  const auto cfg = parse_config(kSmallSweep);
  const auto one = format_entropy(run_entropy(cfg, 1), OutputFormat::Csv);
  const auto three = format_entropy(run_entropy(cfg, 3), OutputFormat::Csv);
  CHECK(one == three);
  CHECK(format_energy(run_energy(cfg, 1), OutputFormat::Json) == format_energy(run_energy(cfg, 4), OutputFormat::Json));
}

TEST_CASE("worker count from the environment") {
  ::setenv("ABRING_THREADS", "3", 1);
  CHECK(threads_from_env() == 3);
  ::setenv("ABRING_THREADS", "zero", 1);
  CHECK(threads_from_env() >= 1);
  ::unsetenv("ABRING_THREADS");
  CHECK(threads_from_env() >= 1);
}

TEST_CASE("figure files: one curve per panel value, densities normalized") {
  const auto dir = std::filesystem::temp_directory_path() / "abring_figures_test";
  std::filesystem::remove_all(dir);
  const auto cfg = load_config(std::string(ABRING_FIXTURE_DIR) + "/figures.ini");
  const auto outcome = write_figures(cfg, dir);
  CHECK(outcome.written.size() == 18);
  CHECK(outcome.skipped.empty());
  for (const char* name : {"fig1a_B1.dat", "fig1b_alpha0.2.dat", "fig1c_phi4.dat", "fig2a_B4.dat"}) {
    CHECK(std::filesystem::exists(dir / name));
  }

  std::ifstream in(dir / "fig2b_alpha0.4.dat");
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("# ", 0) == 0);
  CHECK(header.find("alpha=0.4") != std::string::npos);
  std::vector<double> x, y;
  double a = 0.0, b = 0.0;
  while (in >> a >> b) {
    x.push_back(a);
    y.push_back(b);
  }
  REQUIRE(x.size() == cfg.grid.r_points);
  CHECK(numerics::simpson(y, x[1] - x[0]) == doctest::Approx(1.0).epsilon(1e-6));

  std::ifstream potential(dir / "fig1a_B2.dat");
  std::getline(potential, header);
  std::size_t lines = 0;
  while (potential >> a >> b) ++lines;
  CHECK(lines == cfg.figures.points);
  std::filesystem::remove_all(dir);
}

TEST_CASE("energy sweep order and missing states") {
  const auto cfg = parse_config("[physical]\ndelta = 0.1\nv1 = 20\n[sweep]\nb_field = 1, 2, 4, 100\n");
  const auto rows = run_energy(cfg, 2);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].point.params.b_field == 1.0);
  CHECK(rows[1].point.params.b_field == 2.0);
  CHECK(rows[2].point.params.b_field == 4.0);
  CHECK_FALSE(rows[3].state.exists);
  const auto csv = format_energy(rows, OutputFormat::Csv);
  CHECK(csv.find("\n0,0,100,0,1,0.1,20,,,false\n") != std::string::npos);
}

TEST_CASE("every entropy row reports sum = s_r + s_k") {
  const auto rows = run_entropy(parse_config(kSmallSweep));
  const auto json = nlohmann::json::parse(format_entropy(rows, OutputFormat::Json));
  std::size_t checked = 0;
  for (const auto& row : json["rows"]) {
    if (row["report"].is_null()) continue;
    const auto& r = row["report"];
    CHECK(std::abs(r["sum"].get<double>() - r["s_r"].get<double>() - r["s_k"].get<double>()) <= 5e-5);
    ++checked;
  }
  CHECK(checked == 4);

  // The CSV columns carry six decimals; the identity survives the rounding.
  std::istringstream csv(format_entropy(rows, OutputFormat::Csv));
  std::string line;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() < 8 || f[5].empty()) continue;
    CHECK(std::abs(std::stod(f[7]) - std::stod(f[5]) - std::stod(f[6])) <= 5e-5);
  }
}

TEST_CASE("an empty figure axis gives a single curve at the base value") {
  const auto dir = std::filesystem::temp_directory_path() / "abring_single_curve_test";
  std::filesystem::remove_all(dir);
  const auto cfg = parse_config("[physical]\ndelta = 0.1\nv1 = 200\nb_field = 2\n[figures]\npoints = 10\n");
  const auto outcome = write_figures(cfg, dir);
  CHECK(outcome.written.size() == 6);
  CHECK(std::filesystem::exists(dir / "fig1a_B2.dat"));
  CHECK(std::filesystem::exists(dir / "fig2c_phi0.dat"));
  std::filesystem::remove_all(dir);
}
