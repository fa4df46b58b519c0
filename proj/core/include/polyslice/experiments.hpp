#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyslice/linalg.hpp"

namespace polyslice {

/// Parameters of one experiment run. Unset optionals take per-experiment
/// defaults; an unset n means "sweep the default grid 1..6" where that makes
/// sense (thm1, verify-ext, sandwich).
struct ExperimentConfig {
  std::string experiment;  // thm1 | prop2 | prop3 | verify-ext | sandwich
  std::optional<int> n;
  std::optional<Scalar> r;
  std::optional<Scalar> delta;
  std::optional<Scalar> epsilon;
  std::vector<Scalar> epsilons;
  std::string omega_rule = "default";  // default | list
  std::vector<Scalar> omega;
  std::string g = "e1";  // e1 | e1+e2 | random | comma-separated rationals
  std::optional<Scalar> alpha;
  std::optional<std::size_t> trials;
  std::uint64_t seed = 1;
  std::string format = "csv";  // csv | json
  std::string output_path;
};

enum class Relation { kLe, kLt, kGe, kEq };

std::string relation_symbol(Relation rel);
bool holds(const Scalar& value, Relation rel, const Scalar& bound);

/// One checked inequality. Informational rows (asserted = false) are reported
/// but do not affect the verdict.
struct ReportRow {
  std::string experiment;
  int n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string quantity;
  Scalar value;
  Relation relation = Relation::kLe;
  Scalar bound;
  bool asserted = true;
  bool pass = false;
};

struct Report {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  bool passed() const;
  std::string verdict() const;  // "pass" or "fail"
};

Report run_thm1(int n, const Scalar& epsilon, const std::optional<Scalar>& r = {},
                const std::optional<Scalar>& delta = {}, std::size_t trials = 10000, std::uint64_t seed = 1);
Report run_prop2(int n, const Scalar& r, const std::string& g_spec, const Scalar& alpha, std::size_t trials = 10000,
                 std::uint64_t seed = 1);
Report run_prop3(int n, const std::vector<Scalar>& epsilons, const std::vector<Scalar>& omega = {},
                 std::size_t trials = 10000, std::uint64_t seed = 1);
Report run_verify_ext(int n, const Scalar& r);
Report run_sandwich(int n, const Scalar& r, std::size_t trials = 1000, std::uint64_t seed = 1);

/// Dispatches on config.experiment, sweeping the default grid when n is unset.
/// Sweep cases run concurrently; rows keep config order.
Report run_experiment(const ExperimentConfig& config);

/// Functional for prop2: "e1", "e1+e2", "random" (seeded) or explicit rationals.
Vec functional_from_spec(const std::string& spec, std::size_t dim, std::uint64_t seed);

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);
nlohmann::json to_json(const Report& report);
std::string to_csv(const Report& report);

/// Re-evaluates every row of a serialized report from its exact strings.
/// Returns false if any stored pass flag or the verdict disagrees.
bool recheck_report(const nlohmann::json& report);

}  // namespace polyslice
