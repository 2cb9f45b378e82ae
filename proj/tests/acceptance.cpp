// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "landen_kdv/elliptic.hpp"
#include "landen_kdv/evolver.hpp"
#include "landen_kdv/kdv_solutions.hpp"
#include "landen_kdv/suites.hpp"

using namespace lkdv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Worst metric among records named `check`; folds their pass flags into `ok`.
double worst(const std::vector<CheckRecord>& records, const std::string& check, bool& ok,
             int* count = nullptr) {
  double w = 0.0;
  int n = 0;
  for (const auto& r : records) {
    if (r.check != check) continue;
    ++n;
    ok = ok && r.pass;
    w = std::max(w, r.metric);
  }
  if (count) *count = n;
  if (n == 0) ok = false;
  return w;
}

double least(const std::vector<CheckRecord>& records, const std::string& check, bool& ok) {
  double w = INFINITY;
  for (const auto& r : records) {
    if (r.check != check) continue;
    ok = ok && r.pass;
    w = std::min(w, r.metric);
  }
  return w;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// K(m) = pi/2 * sum_n [(2n)! / (4^n n!^2)]^2 m^n, summed in long double.
double k_series(double m) {
  long double coeff = 1.0L;
  long double power = 1.0L;
  long double sum = 0.0L;
  for (int n = 0; n < 400; ++n) {
    sum += coeff * coeff * power;
    coeff *= (2.0L * n + 1.0L) / (2.0L * n + 2.0L);
    power *= m;
  }
  return static_cast<double>(0.5L * 3.14159265358979323846264338327950288L * sum);
}

bool has_errors(const std::vector<CheckRecord>& records) {
  for (const auto& r : records) {
    if (r.check == "job_error") return true;
  }
  return false;
}

Outcome ac1() {
  VerifyConfig c;
  const auto records = run_jobs(identity_jobs(c), 1);
  bool ok = !has_errors(records);
  const double a = worst(records, "kernel_sn2_plus_cn2", ok);
  const double b = worst(records, "kernel_m_sn2_plus_dn2", ok);
  ok = ok && a < 1e-12 && b < 1e-12;
  const double k = complete_k(0.5);
  const double rel = std::abs(k - k_series(0.5)) / k_series(0.5);
  ok = ok && rel < 1e-13;
  return {ok, fmt("sn2+cn2-1 %.2e, m sn2+dn2-1 %.2e, K(0.5) rel %.2e", a, b, rel)};
}

Outcome ac2() {
  VerifyConfig c;
  const auto records = run_jobs(identity_jobs(c), 1);
  bool ok = !has_errors(records);
  int n = 0;
  const double dn = worst(records, "landen_dn", ok, &n);
  const double closed = worst(records, "landen_p2_closed_form", ok);
  ok = ok && n == 40 && dn < 1e-10 && closed < 1e-12;
  return {ok, fmt("dn identity %.2e over %g (p, m) pairs, p=2 closed forms %.2e", dn, n, closed)};
}

Outcome ac3() {
  VerifyConfig c;
  const auto records = run_jobs(identity_jobs(c), 1);
  bool ok = !has_errors(records);
  int n = 0;
  const double sq = worst(records, "landen_dn2", ok, &n);
  const double spread = worst(records, "cyclic_constancy", ok);
  const double sym = worst(records, "cyclic_symmetry", ok);
  worst(records, "m_tilde_in_range", ok);
  ok = ok && n == 40 && sq < 1e-10 && spread < 1e-10 && sym < 1e-10;
  return {ok, fmt("dn^2 identity %.2e, a_p(r) spread %.2e, r<->p-r %.2e", sq, spread, sym)};
}

Outcome ac4() {
  VerifyConfig c;
  const auto records = run_jobs(equivalence_jobs(c), 1);
  bool ok = !has_errors(records);
  int n = 0;
  const double eq = worst(records, "equivalence", ok, &n);
  ok = ok && n == 6 * 4 * 3 && eq <= 1e-9;
  return {ok, fmt("max deviation %.2e over %g cases", eq, n)};
}

Outcome ac5() {
  VerifyConfig c;
  const auto records = run_jobs(kdv_jobs(c), 1);
  bool ok = !has_errors(records);
  const double r1 = worst(records, "kdv_residual_u1", ok);
  const double rp = worst(records, "kdv_residual_up", ok);
  const double dual = worst(records, "velocity_correction_dual", ok);
  const double acc = worst(records, "kdv_residual_pm_accepted", ok);
  const double rej = least(records, "kdv_residual_pm_rejected", ok);
  least(records, "kdv_residual_non_solution", ok);
  ok = ok && r1 < 1e-8 && rp < 1e-8 && dual < 1e-8 && acc < 1e-7 && rej > 1e-3;
  std::string scaling;
  for (const auto& r : records) {
    if (r.check == "kdv_residual_pm_accepted") {
      scaling = r.params["scaling"].get<std::string>();
      break;
    }
  }
  return {ok, fmt("u1 %.2e, up %.2e, A dual %.2e, ", r1, rp, dual) +
                  fmt("u+- %.2e (", acc) + scaling + fmt("), rejected >= %.2e", rej)};
}

Outcome ac6() {
  VerifyConfig c;
  const auto records = run_jobs(limit_jobs(c), 1);
  bool ok = !has_errors(records);
  const double lim = worst(records, "soliton_limit", ok);
  const double exact = worst(records, "soliton_exact", ok);
  ok = ok && lim < 1e-5 && exact < 1e-12;
  return {ok, fmt("m = 1-1e-12 deviation %.2e, m = 1 deviation %.2e", lim, exact)};
}

struct EvolveResult {
  double deviation;
  double mass_drift;
  double travel_periods;
};

EvolveResult evolve_case(const DnWaveParams& params, double dt, double T) {
  const auto wave = traveling_wave(params);
  EvolverConfig config;
  config.grid = PeriodicGrid(wave.period, 256);
  config.dt = dt;
  config.final_time = T;
  const Field u0 = sample(wave, config.grid, 0.0);
  const auto traj = evolve(u0, config);
  const double dev = (traj.final_state() - sample(wave, config.grid, T)).abs().maxCoeff();
  return {dev, conservation_report(traj, config.grid).mass_drift,
          std::abs(wave.velocity) * T / wave.period};
}

Outcome ac7() {
  const auto a = evolve_case(DnWaveParams(1.0, 0.0, 0.5), 1e-4, 0.7);
  const auto b = evolve_case(DnWaveParams(1.0, -1.0, 0.6, 3), 2e-5, 0.2);
  const bool ok = a.deviation <= 1e-6 && a.mass_drift <= 1e-12 && a.travel_periods >= 1.0 &&
                  b.deviation <= 1e-6 && b.mass_drift <= 1e-12 && b.travel_periods >= 1.0;
  return {ok, fmt("u1 dev %.2e mass %.1e (%.2f periods); ", a.deviation, a.mass_drift,
                  a.travel_periods) +
                  fmt("u3 dev %.2e mass %.1e (%.2f periods)", b.deviation, b.mass_drift,
                      b.travel_periods)};
}

Outcome ac8() {
  VerifyConfig c;
  const std::string first = to_jsonl(run_suite(c));
  const std::string second = to_jsonl(run_suite(c));
  c.jobs = 4;
  const std::string threaded = to_jsonl(run_suite(c));
  const bool ok = !first.empty() && first == second && first == threaded;
  return {ok, fmt("%g bytes, identical across 2 serial runs and 1 threaded run",
                  static_cast<double>(first.size()))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", 1.0, ac1},   {"AC2", 5.0, ac2},   {"AC3", 5.0, ac3},   {"AC4", 10.0, ac4},
      {"AC5", INFINITY, ac5}, {"AC6", INFINITY, ac6}, {"AC7", 60.0, ac7}, {"AC8", INFINITY, ac8}};

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      out.pass = false;
      out.detail += fmt(" [over the %.0f s budget]", c.budget_seconds);
    }
    failures += out.pass ? 0 : 1;
    std::printf("%s %s  %s  (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, out.detail.c_str(),
                secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
