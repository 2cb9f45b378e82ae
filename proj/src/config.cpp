#include "landen_kdv/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace lkdv {

void Tolerances::override_upper_bounds(double value) {
  kernel_identity = k_relative = landen_pointwise = closed_form = value;
  cyclic_constancy = cyclic_symmetry = residual = residual_pm = value;
  velocity_correction = equivalence = soliton_limit = soliton_exact = value;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid config: " + what);
}

bool power_of_two_at_least_64(int n) { return n >= 64 && (n & (n - 1)) == 0; }

void validate_family(const std::string& family, int p, double m, int sign,
                     const std::string& scaling) {
  require(family == "u1" || family == "up" || family == "upm" || family == "constant",
          "family must be one of u1, up, upm, constant");
  require(p >= 1, "p must be >= 1");
  require(m >= 0.0 && m <= 1.0, "m must lie in [0, 1]");
  if (family == "up" && p > 1) require(m > 0.0 && m < 1.0, "up with p > 1 needs 0 < m < 1");
  if (family == "u1") require(p == 1, "u1 requires p = 1");
  require(sign == 1 || sign == -1, "sign must be +1 or -1");
  require(scaling == "standard" || scaling == "as_written",
          "scaling must be standard or as_written");
}

}  // namespace

void validate(const RunConfig& c) {
  require(c.schema_version == kSchemaVersion,
          "unsupported schema_version " + std::to_string(c.schema_version));
  require(c.landen.p >= 1, "landen.p must be >= 1");
  require(c.landen.m > 0.0 && c.landen.m < 1.0, "landen.m must satisfy 0 < m < 1");
  require(c.landen.format == "text" || c.landen.format == "json" || c.landen.format == "csv",
          "landen.format must be text, json or csv");

  const auto& v = c.verify;
  require(v.suite == "identities" || v.suite == "kdv" || v.suite == "equivalence" ||
              v.suite == "limits" || v.suite == "all",
          "verify.suite must be identities, kdv, equivalence, limits or all");
  require(v.jobs >= 1, "verify.jobs must be >= 1");
  require(v.kernel_samples >= 1, "verify.kernel_samples must be >= 1");
  require(v.kernel_m_max >= 0.0 && v.kernel_m_max < 1.0, "verify.kernel_m_max must be in [0, 1)");
  for (int p : v.landen_p) require(p >= 1, "verify.landen_p entries must be >= 1");
  for (int p : v.equivalence_p) require(p >= 1, "verify.equivalence_p entries must be >= 1");
  for (int p : v.residual_p) require(p >= 1, "verify.residual_p entries must be >= 1");
  for (double m : v.landen_m) require(m > 0.0 && m < 1.0, "verify.landen_m must be in (0, 1)");
  for (double m : v.equivalence_m) {
    require(m > 0.0 && m < 1.0, "verify.equivalence_m must be in (0, 1)");
  }
  for (double m : v.residual_m) require(m > 0.0 && m < 1.0, "verify.residual_m must be in (0, 1)");
  for (double m : v.pm_m) require(m > 0.0 && m < 1.0, "verify.pm_m must be in (0, 1)");
  for (const auto& ab : v.alpha_beta) require(ab[0] > 0.0, "verify.alpha_beta alpha must be > 0");
  for (const auto& ab : v.soliton_alpha_beta) {
    require(ab[0] > 0.0, "verify.soliton_alpha_beta alpha must be > 0");
  }
  require(v.pm_alpha > 0.0, "verify.pm_alpha must be > 0");
  require(power_of_two_at_least_64(v.landen_points) &&
              power_of_two_at_least_64(v.equivalence_points) &&
              power_of_two_at_least_64(v.residual_points),
          "grid sizes must be powers of two >= 64");

  const auto& e = c.eval;
  validate_family(e.family, e.p, e.m, e.sign, e.scaling);
  require(e.family != "constant", "eval.family must be u1, up or upm");
  require(power_of_two_at_least_64(e.points), "eval.points must be a power of two >= 64");
  require(e.periods >= 1, "eval.periods must be >= 1");
  require(e.length > 0.0, "eval.length must be positive");

  const auto& ev = c.evolve;
  validate_family(ev.family, ev.p, ev.m, ev.sign, ev.scaling);
  require(ev.family == "constant" || ev.m < 1.0, "evolve needs a periodic wave (m < 1)");
  require(power_of_two_at_least_64(ev.points), "evolve.points must be a power of two >= 64");
  require(ev.periods >= 1, "evolve.periods must be >= 1");
  require(ev.dt > 0.0 && ev.final_time > 0.0, "evolve.dt and evolve.final_time must be > 0");
  require(ev.snapshot_every >= 0, "evolve.snapshot_every must be >= 0");
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    c = j.get<RunConfig>();
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("invalid config: ") + ex.what());
  }
  validate(c);
  return c;
}

nlohmann::json config_to_json(const RunConfig& config) { return config; }

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& ex) {
    throw ConfigError("config file '" + path + "': " + ex.what());
  }
  return config_from_json(j);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

}  // namespace lkdv
