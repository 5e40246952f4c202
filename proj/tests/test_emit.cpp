#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bellsta/emit.hpp"
#include "bellsta/errors.hpp"
#include "bellsta/experiments.hpp"
#include "bellsta/propagate.hpp"
#include "bellsta/state.hpp"

using namespace bellsta;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Trajectory tiny_trajectory() {
  Eigen::Matrix2cd h;
  h << 0.0, 0.3, 0.3, 0.0;
  const HamiltonianSampler sampler{[h](double) -> Eigen::MatrixXcd { return h; }, 2,
                                   Basis::Diabatic2};
  return propagate_fixed(sampler, QuantumState::basis_state(Basis::Diabatic2, 0),
                         TimeGrid{0.0, 1.0, 10});
}

}  // namespace

TEST_CASE("format_double writes shortest round-trip decimals") {
  CHECK(format_double(20.0) == "20.0");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.0) == "0.0");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(3.0) == "3.0");
  CHECK(format_double(kNaN) == "nan");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");

  // Property: every finite double parses back bit-exactly.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-30, 30);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = std::ldexp(mantissa(rng), exponent(rng));
    const std::string text = format_double(x);
    const double back = std::strtod(text.c_str(), nullptr);
    CHECK(std::bit_cast<std::uint64_t>(back) == std::bit_cast<std::uint64_t>(x));
  }
}

TEST_CASE("CSV output matches the documented shape byte for byte") {
  Metadata meta;
  meta.add("a", 1);
  meta.add("q", 0.5);
  meta.add("note", "x");
  const SeriesTable table{{"x", "y"}, {{1.0, kNaN}, {0.5, 2.0}}};
  CHECK(to_csv(table, meta) ==
        "# a=1 q=0.5 note=x\n"
        "x,y\n"
        "1.0,nan\n"
        "0.5,2.0\n");

  // No metadata still emits the comment line, so row one is always headers.
  CHECK(to_csv(table, Metadata{}).rfind("#\nx,y\n", 0) == 0);
}

TEST_CASE("JSON output parses back with string meta and null for NaN") {
  Metadata meta;
  meta.add("steps", 12);
  meta.add("tag", "demo");
  const SeriesTable table{{"x", "y"}, {{1.0, kNaN}, {0.5, 2.0}}};
  const std::string text = to_json(table, meta);
  CHECK(text.back() == '\n');
  CHECK(text.rfind("{\"meta\"", 0) == 0);  // meta leads, insertion-ordered

  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["meta"]["steps"] == "12");
  CHECK(doc["meta"]["tag"] == "demo");
  REQUIRE(doc["records"].size() == 2);
  CHECK(doc["records"][0]["x"] == 1.0);
  CHECK(doc["records"][0]["y"].is_null());
  CHECK(doc["records"][1]["x"] == 0.5);
  CHECK(doc["records"][1]["y"] == 2.0);
}

TEST_CASE("tables reject shape mismatches") {
  const SeriesTable no_columns{{}, {}};
  CHECK_THROWS_AS(to_csv(no_columns, Metadata{}), DomainError);
  CHECK_THROWS_AS(to_json(no_columns, Metadata{}), DomainError);
  const SeriesTable ragged{{"x", "y"}, {{1.0, 2.0}, {3.0}}};
  CHECK_THROWS_AS(to_csv(ragged, Metadata{}), DomainError);
  CHECK_THROWS_AS(to_json(ragged, Metadata{}), DomainError);
}

TEST_CASE("trajectory table lists amplitudes and populations per node") {
  const Trajectory traj = tiny_trajectory();
  const SeriesTable table = trajectory_table(traj);
  CHECK(table.columns ==
        std::vector<std::string>{"t", "re_a1", "im_a1", "re_a2", "im_a2", "p1", "p2"});
  REQUIRE(table.rows.size() == 11);
  CHECK(table.rows[0][0] == 0.0);
  CHECK(table.rows[0][1] == 1.0);  // starts in the first basis state
  CHECK(table.rows[0][5] == 1.0);
  CHECK(table.rows[0][6] == 0.0);
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    const auto& amps = traj.state_at(static_cast<int>(k));
    CHECK(row[0] == traj.time_at(static_cast<int>(k)));
    CHECK(row[1] == amps[0].real());
    CHECK(row[2] == amps[0].imag());
    CHECK(row[3] == amps[1].real());
    CHECK(row[4] == amps[1].imag());
    CHECK(row[5] + row[6] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sweep table flattens the grid in omega0-major order") {
  SweepResult sweep;
  sweep.omega0_values = {0.1, 0.2};
  sweep.alpha_values = {1.0, 2.0};
  sweep.population = {1.0, 2.0, 3.0, kNaN};
  const SeriesTable table = sweep_table(sweep);
  CHECK(table.columns == std::vector<std::string>{"omega0", "alpha", "population"});
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[1] == std::vector<double>{0.1, 2.0, 2.0});
  CHECK(table.rows[2] == std::vector<double>{0.2, 1.0, 3.0});
  CHECK(std::isnan(table.rows[3][2]));
}

TEST_CASE("curve and design tables carry their columns through") {
  FidelityCurve curve;
  curve.t_total = {2.0, 4.0};
  curve.f_adiabatic = {0.3, 0.6};
  curve.f_tqd = {0.99, 0.999};
  curve.f_lri = {1.0, 1.0};
  const SeriesTable ct = curve_table(curve);
  CHECK(ct.columns ==
        std::vector<std::string>{"t_total", "f_adiabatic", "f_tqd", "f_lri"});
  REQUIRE(ct.rows.size() == 2);
  CHECK(ct.rows[1] == std::vector<double>{4.0, 0.6, 0.999, 1.0});

  const DesignReport report = lri_design_report(0.0, 6.0, 3.0, 11);
  const SeriesTable dt = design_report_table(report);
  CHECK(dt.columns ==
        std::vector<std::string>{"t", "gamma", "beta", "omega_lr", "delta_lr"});
  REQUIRE(dt.rows.size() == 11);
  CHECK(dt.rows[0][0] == 0.0);
  CHECK(dt.rows[10][0] == 6.0);
  CHECK(dt.rows[5][1] == doctest::Approx(std::acos(-1.0) / 2).epsilon(1e-9));
}

TEST_CASE("write_text_file creates, truncates, and reports failures by path") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "emit_roundtrip_test.txt";
  write_text_file(path.string(), "hello\nworld\n");
  {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "hello\nworld\n");
  }
  write_text_file(path.string(), "short\n");  // truncates the previous content
  {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "short\n");
  }
  fs::remove(path);

  const std::string bogus = "/nonexistent_dir_for_emit_test/out.csv";
  try {
    write_text_file(bogus, "x");
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find(bogus) != std::string::npos);
  }
}
