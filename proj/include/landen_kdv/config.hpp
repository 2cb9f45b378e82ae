// Run configuration shared by the CLI subcommands, serializable to one JSON file.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lkdv {

inline constexpr int kSchemaVersion = 1;

/// Tolerance profile of the verification suites. Every entry is an upper
/// bound except `pm_rejected_min`, the residual the rejected u+- velocity
/// scaling must exceed.
struct Tolerances {
  double kernel_identity = 1e-12;
  double k_relative = 1e-13;
  double landen_pointwise = 1e-10;
  double closed_form = 1e-12;
  double cyclic_constancy = 1e-10;
  double cyclic_symmetry = 1e-10;
  double residual = 1e-8;
  double residual_pm = 1e-7;
  double pm_rejected_min = 1e-3;
  double non_solution_min = 1e-2;
  double velocity_correction = 1e-8;
  double equivalence = 1e-9;
  double soliton_limit = 1e-5;
  double soliton_exact = 1e-12;

  /// Sets every upper-bound tolerance to `value`.
  void override_upper_bounds(double value);
};

struct VerifyConfig {
  std::string suite = "all";
  std::uint64_t seed = 20240611;
  int kernel_samples = 10000;
  double kernel_m_max = 0.99;

  std::vector<int> landen_p{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> landen_m{0.1, 0.3, 0.5, 0.7, 0.9};
  int landen_points = 512;

  std::vector<int> equivalence_p{1, 2, 3, 4, 5, 6};
  std::vector<double> equivalence_m{0.2, 0.5, 0.8, 0.9};
  std::vector<std::array<double, 2>> alpha_beta{{1.0, 0.0}, {1.7, -0.4}, {2.0, 1.0}};
  std::vector<double> times{0.0, 0.1, 0.5};
  int equivalence_points = 256;

  std::vector<int> residual_p{1, 2, 3, 4};
  std::vector<double> residual_m{0.5, 0.7, 0.9};
  std::vector<double> pm_m{0.2, 0.5, 0.8};
  double pm_alpha = 1.5;
  int residual_points = 256;

  std::vector<std::array<double, 2>> soliton_alpha_beta{{1.0, 0.0}, {2.0, 1.0}};

  Tolerances tol;
  int jobs = 1;
  std::string report;
};

struct LandenCommand {
  int p = 2;
  double m = 0.5;
  std::string format = "text";
};

struct EvalCommand {
  std::string family = "u1";
  int p = 1;
  double m = 0.5;
  double alpha = 1.0;
  double beta = 0.0;
  int sign = 1;
  std::string scaling = "standard";
  int points = 256;
  int periods = 1;
  double t = 0.0;
  double length = 20.0;  ///< window for m = 1, which has no period
  std::string output = "-";
};

struct EvolveCommand {
  std::string family = "u1";
  int p = 1;
  double m = 0.5;
  double alpha = 1.0;
  double beta = 0.0;
  int sign = 1;
  std::string scaling = "standard";
  double constant = 0.0;  ///< value of the "constant" family
  int points = 256;
  int periods = 1;
  double dt = 1e-4;
  double final_time = 0.7;
  int snapshot_every = 0;
  bool dealias = true;
  bool stability_check = true;
  std::string out_dir;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  LandenCommand landen;
  VerifyConfig verify;
  EvalCommand eval;
  EvolveCommand evolve;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(Tolerances, kernel_identity, k_relative,
                                                landen_pointwise, closed_form, cyclic_constancy,
                                                cyclic_symmetry, residual, residual_pm,
                                                pm_rejected_min, non_solution_min,
                                                velocity_correction, equivalence, soliton_limit,
                                                soliton_exact)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(VerifyConfig, suite, seed, kernel_samples,
                                                kernel_m_max, landen_p, landen_m, landen_points,
                                                equivalence_p, equivalence_m, alpha_beta, times,
                                                equivalence_points, residual_p, residual_m, pm_m,
                                                pm_alpha, residual_points, soliton_alpha_beta,
                                                tol, jobs, report)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(LandenCommand, p, m, format)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(EvalCommand, family, p, m, alpha, beta, sign,
                                                scaling, points, periods, t, length, output)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(EvolveCommand, family, p, m, alpha, beta, sign,
                                                scaling, constant, points, periods, dt,
                                                final_time, snapshot_every, dealias,
                                                stability_check, out_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RunConfig, schema_version, landen, verify, eval,
                                                evolve)

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates; throws ConfigError on malformed JSON, unknown
/// schema versions or out-of-range values.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);
void validate(const RunConfig& config);

/// Shortest decimal text with 15 significant digits.
std::string format_double(double value);

}  // namespace lkdv
