#pragma once

#include "chessdeg/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chessdeg {

enum class ScenarioKind { colored_radon, k1, mixed_A, mixed_B, K33, K333, K555, K4444, classic_tverberg };
enum class SearchMode { exhaustive, stochastic };

std::string scenario_name(ScenarioKind kind);
/// Accepts the canonical name with '-' or '_' separators, case-sensitive for
/// the K-names ("K333"). Throws ParameterError on unknown names.
ScenarioKind parse_scenario_name(const std::string& name);

/// One colored Tverberg statement instantiated with parameters. Unused
/// parameters stay 0; the fixed K-scenarios ignore r and d.
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::colored_radon;
  int r = 0;
  int d = 0;
  int k = 0;
  int l = 0;
  int p = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::int64_t budget = 1'000'000;  // LP calls
  std::uint64_t search_seed = 0;    // stochastic mode only
};

/// Fills in the parameters a scenario fixes (r, d for the K-scenarios; r for
/// colored_radon and mixed_B) and checks the statement's hypotheses: prime r
/// where required and the governing inequality. Throws ParameterError.
ScenarioSpec resolve_scenario(ScenarioSpec spec);

/// Color class sizes the statement prescribes, in color order.
std::vector<std::size_t> class_size_plan(const ScenarioSpec& resolved);

/// One-line summary of each scenario's plan and constraints, for --help.
std::vector<std::string> scenario_catalogue();

enum class ScenarioOutcome { found, refuted, inconclusive };

struct ScenarioReport {
  std::string scenario;
  ScenarioSpec spec;  // resolved
  std::vector<std::size_t> plan;
  ScenarioOutcome outcome = ScenarioOutcome::inconclusive;
  std::optional<RainbowPartition> partition;
  std::optional<IntersectionCertificate> certificate;
  std::int64_t lp_calls = 0;
  std::int64_t partitions_examined = 0;
  std::int64_t restarts = 0;
  double elapsed_ms = 0;
  std::optional<std::uint64_t> config_seed;

  /// true / false / unknown, as reported in JSON.
  std::optional<bool> found() const;
};

/// Searches for a verified certificate. Exhaustive mode walks the maximal
/// rainbow partitions in canonical order; since enlarging blocks only grows
/// their hulls, exhausting them refutes every partition. Stochastic mode
/// hill-climbs on the phase-1 infeasibility and can only report found or
/// inconclusive. Throws ParameterError when the configuration does not match
/// the plan or the budget is not positive.
ScenarioReport run_scenario(const ScenarioSpec& spec, const ColoredConfig& config);

/// Same on random_config(d, plan, config_seed).
ScenarioReport run_scenario(const ScenarioSpec& spec, std::uint64_t config_seed, std::int64_t coord_bound = 1000);

}  // namespace chessdeg
