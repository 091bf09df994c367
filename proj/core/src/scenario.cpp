#include "chessdeg/scenario.hpp"

#include "chessdeg/errors.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace chessdeg {

namespace {

struct NamedKind {
  ScenarioKind kind;
  const char* name;
};

constexpr NamedKind kNames[] = {
    {ScenarioKind::colored_radon, "colored-radon"}, {ScenarioKind::k1, "k1"},
    {ScenarioKind::mixed_A, "mixed-A"},             {ScenarioKind::mixed_B, "mixed-B"},
    {ScenarioKind::K33, "K33"},                     {ScenarioKind::K333, "K333"},
    {ScenarioKind::K555, "K555"},                   {ScenarioKind::K4444, "K4444"},
    {ScenarioKind::classic_tverberg, "classic-tverberg"},
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

void require_prime(int r, const std::string& who) {
  require(is_prime(r), who + " needs a prime r, got " + std::to_string(r));
}

std::vector<std::size_t> repeat(std::size_t value, int times) {
  return std::vector<std::size_t>(static_cast<std::size_t>(std::max(times, 0)), value);
}

}  // namespace

std::string scenario_name(ScenarioKind kind) {
  for (const auto& n : kNames)
    if (n.kind == kind) return n.name;
  return "unknown";
}

ScenarioKind parse_scenario_name(const std::string& name) {
  std::string norm = name;
  std::replace(norm.begin(), norm.end(), '_', '-');
  for (const auto& n : kNames)
    if (norm == n.name) return n.kind;
  // Lower-case aliases for the mixed scenarios.
  if (norm == "mixed-a") return ScenarioKind::mixed_A;
  if (norm == "mixed-b") return ScenarioKind::mixed_B;
  throw ParameterError("unknown scenario \"" + name + "\"");
}

ScenarioSpec resolve_scenario(ScenarioSpec s) {
  const std::string who = scenario_name(s.kind);
  switch (s.kind) {
    case ScenarioKind::colored_radon:
      s.r = 2;
      require(s.d >= 1, who + " needs d >= 1");
      break;
    case ScenarioKind::k1:
      require(s.d >= 1, who + " needs d >= 1");
      require_prime(s.r, who);
      s.k = 1;
      s.l = s.d;
      break;
    case ScenarioKind::mixed_A:
      require(s.d >= 1 && s.k >= 0 && s.l >= 0 && s.k + s.l >= 1, who + " needs d >= 1 and k, l >= 0");
      require_prime(s.r, who);
      require(scenario_inequality(InequalityVariant::A, s.r, s.k, s.l, s.d),
              who + ": (r-1)(d-l+1)+1 <= rk fails for r=" + std::to_string(s.r) + ", d=" + std::to_string(s.d) +
                  ", l=" + std::to_string(s.l) + ", k=" + std::to_string(s.k));
      break;
    case ScenarioKind::mixed_B:
      require(s.p >= 2, who + " needs p >= 2");
      if (s.r == 0) s.r = 2 * s.p - 1;
      require(s.d >= 1 && s.k >= 0 && s.l >= 0 && s.k + s.l >= 1, who + " needs d >= 1 and k, l >= 0");
      require_prime(s.r, who);
      require(scenario_inequality(InequalityVariant::B, s.r, s.k, s.l, s.d, s.p),
              who + ": (r-1)(d-l+1)+1 <= pk fails for r=" + std::to_string(s.r) + ", d=" + std::to_string(s.d) +
                  ", l=" + std::to_string(s.l) + ", k=" + std::to_string(s.k) + ", p=" + std::to_string(s.p));
      break;
    case ScenarioKind::K33:
      s.r = 2;
      s.d = 2;
      break;
    case ScenarioKind::K333:
      s.r = 3;
      s.d = 2;
      break;
    case ScenarioKind::K555:
      s.r = 3;
      s.d = 3;
      break;
    case ScenarioKind::K4444:
      s.r = 4;
      s.d = 3;
      break;
    case ScenarioKind::classic_tverberg:
      require(s.r >= 2 && s.d >= 1, who + " needs r >= 2 and d >= 1");
      break;
  }
  require(s.budget > 0, "search budget must be positive");
  return s;
}

std::vector<std::size_t> class_size_plan(const ScenarioSpec& s) {
  std::vector<std::size_t> plan;
  auto append = [&plan](std::vector<std::size_t> more) { plan.insert(plan.end(), more.begin(), more.end()); };
  switch (s.kind) {
    case ScenarioKind::colored_radon:
      plan = {3};
      append(repeat(1, s.d));
      break;
    case ScenarioKind::k1:
      plan = repeat(static_cast<std::size_t>(s.r - 1), s.d);
      plan.push_back(static_cast<std::size_t>(2 * s.r - 1));
      break;
    case ScenarioKind::mixed_A:
      plan = repeat(static_cast<std::size_t>(s.r - 1), s.l);
      append(repeat(static_cast<std::size_t>(2 * s.r - 1), s.k));
      break;
    case ScenarioKind::mixed_B:
      plan = repeat(static_cast<std::size_t>(s.r - 1), s.l);
      append(repeat(static_cast<std::size_t>(s.p), s.k));
      break;
    case ScenarioKind::K33:
      plan = {3, 3};
      break;
    case ScenarioKind::K333:
      plan = {3, 3, 3};
      break;
    case ScenarioKind::K555:
      plan = {5, 5, 5};
      break;
    case ScenarioKind::K4444:
      plan = {4, 4, 4, 4};
      break;
    case ScenarioKind::classic_tverberg:
      plan = repeat(1, (s.r - 1) * (s.d + 1) + 1);
      break;
  }
  return plan;
}

std::vector<std::string> scenario_catalogue() {
  return {
      "colored-radon    --d D            : d+3 points, one class of 3 and d singletons, r = 2",
      "k1               --r R --d D      : d classes of r-1 and one class of 2r-1, r prime",
      "mixed-A          --r R --d D --l L --k K : l classes of r-1, k classes of 2r-1, r prime, (r-1)(d-l+1)+1 <= rk",
      "mixed-B          --p P --d D --l L --k K : r = 2p-1 prime, l classes of r-1, k classes of p, (r-1)(d-l+1)+1 <= pk",
      "K33                               : d = 2, classes 3,3, r = 2",
      "K333                              : d = 2, classes 3,3,3, r = 3",
      "K555                              : d = 3, classes 5,5,5, r = 3",
      "K4444                             : d = 3, classes 4,4,4,4, r = 4",
      "classic-tverberg --r R --d D      : (r-1)(d+1)+1 points, each its own color",
  };
}

std::optional<bool> ScenarioReport::found() const {
  switch (outcome) {
    case ScenarioOutcome::found:
      return true;
    case ScenarioOutcome::refuted:
      return false;
    case ScenarioOutcome::inconclusive:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool record_if_feasible(const ColoredConfig& config, const RainbowPartition& partition, const CommonPointResult& lp,
                        ScenarioReport& report) {
  if (!lp.feasible()) return false;
  if (!verify_certificate(config, partition, *lp.certificate))
    throw IntegrityError("solver produced a certificate that fails verification");
  report.outcome = ScenarioOutcome::found;
  report.partition = partition;
  report.certificate = lp.certificate;
  return true;
}

void search_exhaustive(const ColoredConfig& config, ScenarioReport& report) {
  RainbowPartitionStream stream(config, static_cast<std::size_t>(report.spec.r), PartitionFilter::maximal);
  while (auto partition = stream.next()) {
    if (report.lp_calls >= report.spec.budget) {
      report.outcome = ScenarioOutcome::inconclusive;
      return;
    }
    ++report.partitions_examined;
    ++report.lp_calls;
    if (record_if_feasible(config, *partition, common_point_lp(config, *partition), report)) return;
  }
  report.outcome = ScenarioOutcome::refuted;
}

// Local search over maximal assignments. labels[i] = 0 (unused) or a block
// number 1..r; every block stays nonempty and rainbow.
class StochasticSearch {
 public:
  StochasticSearch(const ColoredConfig& config, ScenarioReport& report)
      : config_(config), report_(report), r_(static_cast<std::size_t>(report.spec.r)), rng_(report.spec.search_seed) {}

  void run() {
    const std::int64_t stall_limit = 40 * static_cast<std::int64_t>(config_.size());
    while (report_.lp_calls < report_.spec.budget) {
      if (!random_start()) {
        report_.outcome = ScenarioOutcome::inconclusive;
        return;
      }
      Rational current;
      if (evaluate(labels_, current)) return;
      std::int64_t stall = 0;
      while (stall < stall_limit && report_.lp_calls < report_.spec.budget) {
        auto candidate = labels_;
        if (!random_move(candidate)) break;
        Rational value;
        if (evaluate(candidate, value)) return;
        if (value < current) {
          stall = 0;
        } else {
          ++stall;
          if (value > current) continue;
        }
        labels_ = std::move(candidate);
        current = value;
      }
      ++report_.restarts;
    }
    report_.outcome = ScenarioOutcome::inconclusive;
  }

 private:
  int color(std::size_t i) const { return config_.point(i).color; }

  bool block_has_color(const std::vector<int>& labels, int block, int c, std::size_t except) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (i != except && labels[i] == block && color(i) == c) return true;
    return false;
  }

  std::size_t block_size(const std::vector<int>& labels, int block) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), block));
  }

  // Random greedy maximal assignment: visit points in random order, put each
  // into a random block lacking its color.
  bool random_start() {
    for (int attempt = 0; attempt < 100; ++attempt) {
      labels_.assign(config_.size(), 0);
      std::vector<std::size_t> order(config_.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng_);
      for (std::size_t i : order) {
        std::vector<int> options;
        for (int b = 1; b <= static_cast<int>(r_); ++b)
          if (!block_has_color(labels_, b, color(i), i)) options.push_back(b);
        if (options.empty()) continue;
        labels_[i] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
      }
      bool all_open = true;
      for (int b = 1; b <= static_cast<int>(r_); ++b) all_open = all_open && block_size(labels_, b) > 0;
      if (all_open) return true;
    }
    return false;
  }

  // Moves one point to another block (or out), or swaps two points between
  // blocks, keeping every block rainbow and nonempty.
  bool random_move(std::vector<int>& labels) {
    const std::size_t n = labels.size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::size_t i = pick(rng_);
      const std::size_t j = pick(rng_);
      if (i == j || labels[i] == labels[j]) continue;
      const int bi = labels[i];
      const int bj = labels[j];
      // Swap i and j.
      bool ok = (bj == 0 || !block_has_color(labels, bj, color(i), j)) &&
                (bi == 0 || !block_has_color(labels, bi, color(j), i));
      if (ok) {
        std::swap(labels[i], labels[j]);
        return true;
      }
      // Otherwise move i into j's block if that keeps i's old block nonempty.
      if (bj != 0 && !block_has_color(labels, bj, color(i), i) && (bi == 0 || block_size(labels, bi) > 1)) {
        labels[i] = bj;
        return true;
      }
    }
    return false;
  }

  static RainbowPartition to_partition(const std::vector<int>& labels, std::size_t r) {
    std::vector<std::vector<std::size_t>> blocks(r);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] > 0) blocks[labels[i] - 1].push_back(i);
    std::sort(blocks.begin(), blocks.end());
    return RainbowPartition{std::move(blocks)};
  }

  bool evaluate(const std::vector<int>& labels, Rational& value) {
    const RainbowPartition partition = to_partition(labels, r_);
    ++report_.lp_calls;
    ++report_.partitions_examined;
    const auto lp = common_point_lp(config_, partition);
    value = lp.infeasibility;
    return record_if_feasible(config_, partition, lp, report_);
  }

  const ColoredConfig& config_;
  ScenarioReport& report_;
  std::size_t r_;
  std::mt19937_64 rng_;
  std::vector<int> labels_;
};

}  // namespace

ScenarioReport run_scenario(const ScenarioSpec& spec, const ColoredConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioReport report;
  report.spec = resolve_scenario(spec);
  report.scenario = scenario_name(report.spec.kind);
  report.plan = class_size_plan(report.spec);
  if (config.dim() != report.spec.d)
    throw ParameterError(report.scenario + " expects dimension " + std::to_string(report.spec.d) + ", config has " +
                         std::to_string(config.dim()));
  if (config.class_sizes() != report.plan)
    throw ParameterError("configuration class sizes do not match the " + report.scenario + " plan");

  if (report.spec.mode == SearchMode::exhaustive)
    search_exhaustive(config, report);
  else
    StochasticSearch(config, report).run();

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScenarioReport run_scenario(const ScenarioSpec& spec, std::uint64_t config_seed, std::int64_t coord_bound) {
  const auto resolved = resolve_scenario(spec);
  const auto config = random_config(resolved.d, class_size_plan(resolved), config_seed, coord_bound);
  auto report = run_scenario(resolved, config);
  report.config_seed = config_seed;
  return report;
}

}  // namespace chessdeg
