#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "hartley/io.hpp"

using namespace hartley;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("hartley_io_test_" + name);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("function file round trip is bit-exact") {
  const Grid g = make_grid(20.0, 513);
  std::mt19937_64 rng(101);
  const SampledFunction f = verify::random_mixture(g, rng);

  const fs::path path = temp_file("roundtrip.csv");
  write_function(path, f);
  const SampledFunction back = read_function(path);
  CHECK(back.grid() == f.grid());
  for (int i = 0; i < g.size(); ++i) CHECK(back[i] == f[i]);

  const SampledFunction with_grid = read_function(path, g);
  CHECK(with_grid.grid() == g);
  CHECK_THROWS_AS(read_function(path, make_grid(20.0, 1025)), GridMismatch);
  fs::remove(path);
}

TEST_CASE("spectrum file round trip") {
  const Grid g = make_grid(5.0, 65);
  const Spectrum s = Spectrum::sample(g, [](double y) { return std::exp(-y * y); });
  const fs::path path = temp_file("spectrum.csv");
  write_spectrum(path, s);
  const Spectrum back = read_spectrum(path);
  for (int i = 0; i < g.size(); ++i) CHECK(back[i] == s[i]);
  fs::remove(path);
}

TEST_CASE("format errors carry line numbers") {
  const fs::path path = temp_file("bad.csv");

  write_text(path, "x,value\n-1,0\n0,1\n-0.5,0\n1,0\n");  // non-monotone at line 4
  try {
    read_function(path);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }

  write_text(path, "x;value\n-1,0\n0,1\n1,0\n");
  CHECK_THROWS_AS(read_function(path), FormatError);

  write_text(path, "x,value\n-1,0\n0,abc\n1,0\n");
  CHECK_THROWS_AS(read_function(path), FormatError);

  write_text(path, "x,value\n");
  CHECK_THROWS_AS(read_function(path), GridMismatch);  // zero rows is not a grid

  CHECK_THROWS_AS(read_function(temp_file("missing_file.csv")), FormatError);
  fs::remove(path);
}

TEST_CASE("grid shape errors") {
  const fs::path path = temp_file("shape.csv");

  write_text(path, "x,value\n-1,0\n-0.5,0\n0,1\n1,0\n");  // 4 rows: even
  CHECK_THROWS_AS(read_function(path), GridMismatch);

  write_text(path, "x,value\n-1,0\n0,1\n2,0\n");  // asymmetric
  CHECK_THROWS_AS(read_function(path), GridMismatch);

  write_text(path, "x,value\n-1,0\n-0.25,0\n0,1\n0.25,0\n1,0\n");  // non-uniform
  CHECK_THROWS_AS(read_function(path), GridMismatch);
  fs::remove(path);
}

TEST_CASE("run config") {
  const RunConfig def;
  CHECK(def.a == 1.0);
  CHECK(def.N == 2049);
  CHECK(def.tol("round_trip") == 5e-5);
  CHECK(def.tol("factorization") == 1e-5);
  CHECK_THROWS_AS(def.tol("no_such_tolerance"), InvalidParams);

  const fs::path path = temp_file("config.json");
  write_text(path, R"({"a": 2.0, "b": -1.0, "L": 10.0, "N": 513, "seed": 7,
                       "tolerances": {"round_trip": 1e-4}})");
  const RunConfig cfg = load_config(path);
  CHECK(cfg.a == 2.0);
  CHECK(cfg.b == -1.0);
  CHECK(cfg.L == 10.0);
  CHECK(cfg.N == 513);
  CHECK(cfg.seed == 7);
  CHECK(cfg.tol("round_trip") == 1e-4);
  CHECK(cfg.tol("factorization") == 1e-5);  // ladder fallback

  write_text(path, R"({"tolerances": {"bogus": 1.0}})");
  CHECK_THROWS_AS(load_config(path), FormatError);

  write_text(path, "{not json");
  CHECK_THROWS_AS(load_config(path), FormatError);
  fs::remove(path);
}

TEST_CASE("verification report serialization") {
  auto report = VerificationReport::upper("demo", 1.0, 2.0, 1e-9);
  report.diagnostics["extra"] = 3.5;
  const auto j = to_json(report);
  for (const char* key : {"name", "measured", "bound", "margin", "pass", "tolerance"})
    CHECK(j.contains(key));
  CHECK(j["pass"].get<bool>());
  CHECK(j["margin"].get<double>() == 1.0);
  CHECK(j["diagnostics"]["extra"].get<double>() == 3.5);

  const auto lower = VerificationReport::lower("floor", 0.5, 1.0);
  CHECK(!lower.pass);
  CHECK(lower.margin == -0.5);
}
