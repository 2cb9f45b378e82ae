// Verification suites over parameter grids, reported as JSON lines.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "landen_kdv/config.hpp"

namespace lkdv {

/// One line of a verification report: {check, params, metric, tol, pass}.
struct CheckRecord {
  std::string check;
  nlohmann::json params;
  double metric;
  double tol;
  bool pass;
};

nlohmann::json to_json(const CheckRecord& record);
std::string to_jsonl(const std::vector<CheckRecord>& records);

CheckRecord upper_bound_check(std::string name, nlohmann::json params, double metric, double tol);
CheckRecord lower_bound_check(std::string name, nlohmann::json params, double metric, double tol);

using CheckJob = std::function<std::vector<CheckRecord>()>;

/// Jobs of each suite. Each job is independent and deterministic.
std::vector<CheckJob> identity_jobs(const VerifyConfig& config);
std::vector<CheckJob> kdv_jobs(const VerifyConfig& config);
std::vector<CheckJob> equivalence_jobs(const VerifyConfig& config);
std::vector<CheckJob> limit_jobs(const VerifyConfig& config);
std::vector<CheckJob> suite_jobs(const VerifyConfig& config);

/// Runs jobs on up to `threads` workers. Records come back in job order
/// whatever the scheduling; a job that throws becomes one failed record.
std::vector<CheckRecord> run_jobs(const std::vector<CheckJob>& jobs, int threads);

std::vector<CheckRecord> run_suite(const VerifyConfig& config);

bool all_passed(const std::vector<CheckRecord>& records);

}  // namespace lkdv
