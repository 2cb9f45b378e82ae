// landen-kdv: Landen tables, verification suites, field dumps and evolution runs.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "landen_kdv/config.hpp"
#include "landen_kdv/evolver.hpp"
#include "landen_kdv/kdv_solutions.hpp"
#include "landen_kdv/landen.hpp"
#include "landen_kdv/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr const char* kSchema = "landen-kdv/1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_field_csv(std::ostream& out, const lkdv::Field& x, const lkdv::Field& u) {
  out << "x,u\n";
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    out << lkdv::format_double(x[j]) << ',' << lkdv::format_double(u[j]) << '\n';
  }
}

// ---- landen ---------------------------------------------------------------

int cmd_landen(const lkdv::LandenCommand& c) {
  const lkdv::LandenMap map = lkdv::landen_map(c.p, c.m);
  const auto f = lkdv::format_double;
  if (c.format == "json") {
    json j = envelope("landen");
    j["p"] = map.p;
    j["m"] = map.m();
    j["K"] = map.K();
    j["gamma"] = map.gamma;
    j["m_tilde"] = map.m_tilde;
    j["shifts"] = map.shifts;
    j["cyclic"] = map.cyclic;
    j["cyclic_sum"] = map.cyclic_sum;
    j["A"] = map.velocity_correction;
    std::cout << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << "quantity,index,value\n";
    std::cout << "p,," << map.p << '\n';
    std::cout << "m,," << f(map.m()) << '\n';
    std::cout << "K,," << f(map.K()) << '\n';
    std::cout << "gamma,," << f(map.gamma) << '\n';
    std::cout << "m_tilde,," << f(map.m_tilde) << '\n';
    for (int i = 0; i < map.p; ++i) std::cout << "shift," << i + 1 << ',' << f(map.shifts[i]) << '\n';
    for (int r = 1; r < map.p; ++r) std::cout << "a," << r << ',' << f(map.cyclic[r - 1]) << '\n';
    std::cout << "A,," << f(map.velocity_correction) << '\n';
  } else {
    std::cout << "p        = " << map.p << '\n'
              << "m        = " << f(map.m()) << '\n'
              << "K(m)     = " << f(map.K()) << '\n'
              << "gamma    = " << f(map.gamma) << '\n'
              << "m_tilde  = " << f(map.m_tilde) << '\n';
    for (int i = 0; i < map.p; ++i) {
      std::cout << "shift[" << i + 1 << "] = " << f(map.shifts[i]) << '\n';
    }
    for (int r = 1; r < map.p; ++r) {
      std::cout << "a_" << map.p << "(" << r << ")   = " << f(map.cyclic[r - 1]) << '\n';
    }
    std::cout << "A(p,m)   = " << f(map.velocity_correction) << '\n';
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const lkdv::VerifyConfig& c, bool as_json) {
  const auto records = lkdv::run_suite(c);
  const std::string jsonl = lkdv::to_jsonl(records);
  if (c.report == "-") {
    std::cout << jsonl;
  } else if (!c.report.empty()) {
    auto out = open_output(c.report);
    out << jsonl;
    if (!out) throw IoError("failed writing report '" + c.report + "'");
  }

  int failed = 0;
  for (const auto& r : records) failed += r.pass ? 0 : 1;
  if (as_json) {
    json j = envelope("verify");
    j["suite"] = c.suite;
    j["total"] = records.size();
    j["failed"] = failed;
    j["pass"] = failed == 0;
    std::cout << j.dump() << '\n';
  } else if (c.report != "-") {
    for (const auto& r : records) {
      if (!r.pass) {
        std::cout << "FAIL " << r.check << ' ' << r.params.dump()
                  << " metric=" << lkdv::format_double(r.metric)
                  << " tol=" << lkdv::format_double(r.tol) << '\n';
      }
    }
    std::cout << "suite " << c.suite << ": " << records.size() - failed << '/' << records.size()
              << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

// ---- eval / evolve --------------------------------------------------------

struct WaveSpec {
  std::string family;
  int p;
  double m;
  double alpha;
  double beta;
  int sign;
  std::string scaling;
};

lkdv::TravelingWave make_wave(const WaveSpec& w) {
  if (w.family == "upm") {
    return lkdv::traveling_wave(lkdv::PmWaveParams(w.alpha, w.m, w.sign),
                                lkdv::velocity_scaling_from_string(w.scaling));
  }
  return lkdv::traveling_wave(lkdv::DnWaveParams(w.alpha, w.beta, w.m, w.p));
}

int cmd_eval(const lkdv::EvalCommand& c, bool as_json) {
  const auto wave = make_wave({c.family, c.p, c.m, c.alpha, c.beta, c.sign, c.scaling});
  // m = 1 has no period: sample a window centred on the crest instead.
  const bool periodic = std::isfinite(wave.period);
  const double length = periodic ? c.periods * wave.period : c.length;
  const lkdv::PeriodicGrid grid(length, c.points);
  lkdv::Field x = grid.nodes();
  if (!periodic) x -= length / 2.0;
  lkdv::Field u(grid.size());
  for (int j = 0; j < grid.size(); ++j) u[j] = wave.profile(x[j], c.t);

  if (as_json) {
    json j = envelope("eval");
    j["family"] = c.family;
    j["period"] = periodic ? json(wave.period) : json(nullptr);
    j["velocity"] = wave.velocity;
    j["x"] = std::vector<double>(x.begin(), x.end());
    j["u"] = std::vector<double>(u.begin(), u.end());
    if (c.output == "-") {
      std::cout << j.dump() << '\n';
    } else {
      auto out = open_output(c.output);
      out << j.dump() << '\n';
    }
    return kExitOk;
  }
  if (c.output == "-") {
    write_field_csv(std::cout, x, u);
  } else {
    auto out = open_output(c.output);
    write_field_csv(out, x, u);
    if (!out) throw IoError("failed writing '" + c.output + "'");
  }
  return kExitOk;
}

int cmd_evolve(const lkdv::EvolveCommand& c, bool as_json) {
  lkdv::TravelingWave wave;
  if (c.family == "constant") {
    const double value = c.constant;
    wave = {"constant", [value](double, double) { return value; }, 0.0, 1.0};
  } else {
    wave = make_wave({c.family, c.p, c.m, c.alpha, c.beta, c.sign, c.scaling});
  }
  const lkdv::PeriodicGrid grid(c.periods * wave.period, c.points);
  lkdv::EvolverConfig config;
  config.grid = grid;
  config.dt = c.dt;
  config.final_time = c.final_time;
  config.dealias = c.dealias;
  config.snapshot_every = c.snapshot_every;
  config.enforce_stability_bound = c.stability_check;

  const lkdv::Field u0 = lkdv::sample(wave, grid, 0.0);
  const auto trajectory = lkdv::evolve(u0, config);
  const lkdv::Field exact = lkdv::sample(wave, grid, c.final_time);
  const double deviation = (trajectory.final_state() - exact).abs().maxCoeff();
  const auto conservation = lkdv::conservation_report(trajectory, grid);
  const double measured_shift = lkdv::translation_shift(u0, trajectory.final_state(), grid);
  const double predicted_shift =
      std::fmod(std::fmod(wave.velocity * c.final_time, grid.length()) + grid.length(),
                grid.length());

  json meta = envelope("evolve");
  meta["family"] = c.family;
  meta["config"] = c;
  meta["length"] = grid.length();
  meta["velocity"] = wave.velocity;
  meta["steps"] = lkdv::step_count(config);
  meta["max_deviation"] = deviation;
  meta["mass_drift"] = conservation.mass_drift;
  meta["momentum_drift"] = conservation.momentum_drift;
  meta["measured_shift"] = measured_shift;
  meta["predicted_shift"] = predicted_shift;
  meta["snapshot_times"] = trajectory.times;

  if (!c.out_dir.empty()) {
    const fs::path dir(c.out_dir);
    const lkdv::Field x = grid.nodes();
    for (std::size_t s = 0; s < trajectory.snapshots.size(); ++s) {
      char name[32];
      std::snprintf(name, sizeof name, "snapshot_%06zu.csv", s);
      auto out = open_output(dir / name);
      write_field_csv(out, x, trajectory.snapshots[s]);
    }
    auto out = open_output(dir / "run.json");
    out << meta.dump(2) << '\n';
  }

  if (as_json) {
    meta.erase("snapshot_times");
    std::cout << meta.dump() << '\n';
  } else {
    const auto f = lkdv::format_double;
    std::cout << "family          = " << c.family << '\n'
              << "steps           = " << lkdv::step_count(config) << '\n'
              << "max deviation   = " << f(deviation) << '\n'
              << "mass drift      = " << f(conservation.mass_drift) << '\n'
              << "momentum drift  = " << f(conservation.momentum_drift) << '\n'
              << "shift measured  = " << f(measured_shift) << '\n'
              << "shift predicted = " << f(predicted_shift) << '\n';
  }
  return kExitOk;
}

std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.starts_with("--config=")) return std::string(arg.substr(9));
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  lkdv::RunConfig cfg;
  try {
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) cfg = lkdv::load_config(config_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Generalized Landen transformations and superposed KdV cnoidal waves"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string save_config;
  app.add_option("--config", config_path, "JSON run configuration (flags override it)");
  app.add_option("--save-config", save_config, "write the effective configuration as JSON");

  bool as_json = false;
  bool as_csv = false;

  auto* landen = app.add_subcommand("landen", "gamma, m_tilde, shifts, a_p(r) and A(p,m)");
  landen->add_option("-p", cfg.landen.p, "number of superposed terms (>= 1)")->capture_default_str();
  landen->add_option("-m", cfg.landen.m, "modulus parameter, 0 < m < 1")->capture_default_str();
  landen->add_flag("--json", as_json, "JSON output");
  landen->add_flag("--csv", as_csv, "CSV output");

  auto& v = cfg.verify;
  std::vector<int> p_list;
  std::vector<double> m_list;
  double tol_override = 0.0;
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 0 iff all pass");
  verify->add_option("--suite", v.suite, "identities | kdv | equivalence | limits | all")
      ->check(CLI::IsMember({"identities", "kdv", "equivalence", "limits", "all"}))
      ->capture_default_str();
  verify->add_option("-p", p_list, "restrict every p grid to these values");
  verify->add_option("-m", m_list, "restrict every m grid to these values");
  auto* tol_opt =
      verify->add_option("--tol", tol_override, "override every upper-bound tolerance");
  verify->add_option("--report", v.report, "JSONL report path ('-' for stdout)");
  verify->add_option("--jobs", v.jobs, "concurrent checks")
      ->envname("LANDEN_KDV_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", v.seed, "seed of the random kernel sample")->capture_default_str();
  verify->add_flag("--json", as_json, "JSON summary");

  auto& e = cfg.eval;
  auto* eval = app.add_subcommand("eval", "dump (x, u) samples of a wave as CSV");
  eval->add_option("--family", e.family, "u1 | up | upm")
      ->check(CLI::IsMember({"u1", "up", "upm"}))
      ->capture_default_str();
  eval->add_option("-p", e.p, "terms in the superposition")->capture_default_str();
  eval->add_option("-m", e.m, "modulus parameter")->capture_default_str();
  eval->add_option("--alpha", e.alpha, "inverse length scale")->capture_default_str();
  eval->add_option("--beta", e.beta, "offset")->capture_default_str();
  eval->add_option("--sign", e.sign, "+1 or -1 (upm)")->capture_default_str();
  eval->add_option("--scaling", e.scaling, "standard | as_written (upm)")->capture_default_str();
  eval->add_option("-N", e.points, "grid points (power of two >= 64)")->capture_default_str();
  eval->add_option("--periods", e.periods, "periods in the window")->capture_default_str();
  eval->add_option("-t", e.t, "time")->capture_default_str();
  eval->add_option("--length", e.length, "window length when m = 1")->capture_default_str();
  eval->add_option("-o,--output", e.output, "output path ('-' for stdout)")->capture_default_str();
  eval->add_flag("--json", as_json, "JSON output");

  auto& ev = cfg.evolve;
  bool no_dealias = false;
  bool no_stability_check = false;
  auto* evolve = app.add_subcommand("evolve", "pseudo-spectral run compared with the exact translate");
  evolve->add_option("--family", ev.family, "u1 | up | upm | constant")
      ->check(CLI::IsMember({"u1", "up", "upm", "constant"}))
      ->capture_default_str();
  evolve->add_option("-p", ev.p, "terms in the superposition")->capture_default_str();
  evolve->add_option("-m", ev.m, "modulus parameter")->capture_default_str();
  evolve->add_option("--alpha", ev.alpha, "inverse length scale")->capture_default_str();
  evolve->add_option("--beta", ev.beta, "offset")->capture_default_str();
  evolve->add_option("--sign", ev.sign, "+1 or -1 (upm)")->capture_default_str();
  evolve->add_option("--scaling", ev.scaling, "standard | as_written (upm)")->capture_default_str();
  evolve->add_option("--constant", ev.constant, "value for --family constant")->capture_default_str();
  evolve->add_option("-N", ev.points, "grid points (power of two >= 64)")->capture_default_str();
  evolve->add_option("--periods", ev.periods, "wave periods in the domain")->capture_default_str();
  evolve->add_option("--dt", ev.dt, "time step")->capture_default_str();
  evolve->add_option("-T", ev.final_time, "final time (multiple of dt)")->capture_default_str();
  evolve->add_option("--snapshot-every", ev.snapshot_every, "steps between snapshots (0: ends only)")
      ->capture_default_str();
  evolve->add_option("--out-dir", ev.out_dir, "directory for snapshot CSVs and run.json");
  evolve->add_flag("--no-dealias", no_dealias, "disable the 2/3 rule");
  evolve->add_flag("--no-stability-check", no_stability_check,
                   "skip the a-priori dt bound (runtime blow-up detection stays on)");
  evolve->add_flag("--json", as_json, "JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    if (*landen) {
      if (as_json && as_csv) throw UsageError("--json and --csv are exclusive");
      if (as_json) cfg.landen.format = "json";
      if (as_csv) cfg.landen.format = "csv";
    }
    if (*verify) {
      if (!p_list.empty()) v.landen_p = v.equivalence_p = v.residual_p = p_list;
      if (!m_list.empty()) v.landen_m = v.equivalence_m = v.residual_m = v.pm_m = m_list;
      if (tol_opt->count() > 0) v.tol.override_upper_bounds(tol_override);
    }
    if (*evolve) {
      if (no_dealias) ev.dealias = false;
      if (no_stability_check) ev.stability_check = false;
    }
    lkdv::validate(cfg);
    if (!save_config.empty()) {
      auto out = open_output(save_config);
      out << lkdv::config_to_json(cfg).dump(2) << '\n';
    }

    if (*landen) return cmd_landen(cfg.landen);
    if (*verify) return cmd_verify(cfg.verify, as_json);
    if (*eval) return cmd_eval(cfg.eval, as_json);
    if (*evolve) return cmd_evolve(cfg.evolve, as_json);
  } catch (const lkdv::ConfigError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const lkdv::InstabilityError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
