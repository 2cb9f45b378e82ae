#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "landen_kdv/config.hpp"

using namespace lkdv;
using nlohmann::json;

namespace {

RunConfig random_config(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(1, 8);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  std::uniform_real_distribution<double> pos(0.1, 3.0);
  RunConfig c;
  c.landen.p = small(rng);
  c.landen.m = unit(rng);
  c.landen.format = small(rng) % 2 ? "json" : "csv";
  c.verify.seed = rng();
  c.verify.jobs = small(rng);
  c.verify.landen_p = {small(rng), small(rng)};
  c.verify.equivalence_m = {unit(rng)};
  c.verify.alpha_beta = {{pos(rng), unit(rng) - 0.5}};
  c.verify.tol.equivalence = unit(rng) * 1e-9;
  c.verify.report = "out/report.jsonl";
  c.eval.family = "upm";
  c.eval.sign = -1;
  c.eval.scaling = "as_written";
  c.eval.alpha = pos(rng);
  c.eval.points = 1 << (6 + small(rng) % 4);
  c.evolve.family = "up";
  c.evolve.p = small(rng);
  c.evolve.m = unit(rng);
  c.evolve.dt = unit(rng) * 1e-3;
  c.evolve.final_time = pos(rng);
  c.evolve.dealias = false;
  return c;
}

}  // namespace

TEST_CASE("config round-trips through JSON (property)") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const RunConfig c = random_config(rng);
    const json j = config_to_json(c);
    const RunConfig back = config_from_json(json::parse(j.dump()));
    CHECK(config_to_json(back) == j);
    CHECK(back.verify.seed == c.verify.seed);
    CHECK(back.evolve.dt == c.evolve.dt);
  }
}

TEST_CASE("partial documents fall back to defaults") {
  const RunConfig c = config_from_json(json::parse(R"({"verify": {"suite": "kdv"}})"));
  CHECK(c.verify.suite == "kdv");
  CHECK(c.verify.kernel_samples == 10000);
  CHECK(c.verify.tol.equivalence == 1e-9);
  CHECK(c.evolve.final_time == 0.7);
}

TEST_CASE("config files") {
  const auto dir = std::filesystem::temp_directory_path() / "landen_kdv_test_config";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.json";
  std::ofstream(good) << R"({"schema_version": 1, "landen": {"p": 4, "m": 0.3}})";
  const RunConfig c = load_config(good.string());
  CHECK(c.landen.p == 4);
  CHECK(c.landen.m == 0.3);

  const auto broken = dir / "broken.json";
  std::ofstream(broken) << "{ not json";
  CHECK_THROWS_AS(load_config(broken.string()), ConfigError);
  CHECK_THROWS_AS(load_config((dir / "missing.json").string()), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("invalid configurations are rejected") {
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"schema_version": 2})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"landen": {"p": "two"}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"landen": {"m": 1.0}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"verify": {"suite": "none"}})")),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"verify": {"jobs": 0}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"eval": {"points": 100}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"eval": {"family": "u1", "p": 2}})")),
                  ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"evolve": {"sign": 0}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"evolve": {"dt": -1}})")), ConfigError);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"evolve": {"m": 1.0}})")), ConfigError);
  CHECK_NOTHROW(config_from_json(json::parse(R"({"evolve": {"family": "constant"}})")));
}

TEST_CASE("tolerance override leaves lower bounds alone") {
  Tolerances t;
  t.override_upper_bounds(1e-3);
  CHECK(t.kernel_identity == 1e-3);
  CHECK(t.equivalence == 1e-3);
  CHECK(t.soliton_exact == 1e-3);
  CHECK(t.pm_rejected_min == 1e-3);
  CHECK(t.non_solution_min == 1e-2);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_double(-2.5e-17) == "-2.5e-17");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}
