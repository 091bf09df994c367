#include "chessdeg/errors.hpp"
#include "chessdeg/scenario.hpp"

#include <doctest.h>

using namespace chessdeg;

namespace {

ScenarioSpec spec(ScenarioKind kind, int r = 0, int d = 0, int k = 0, int l = 0, int p = 0) {
  ScenarioSpec s;
  s.kind = kind;
  s.r = r;
  s.d = d;
  s.k = k;
  s.l = l;
  s.p = p;
  return s;
}

}  // namespace

TEST_CASE("scenario names") {
  for (auto kind : {ScenarioKind::colored_radon, ScenarioKind::k1, ScenarioKind::mixed_A, ScenarioKind::mixed_B,
                    ScenarioKind::K33, ScenarioKind::K333, ScenarioKind::K555, ScenarioKind::K4444,
                    ScenarioKind::classic_tverberg})
    CHECK(parse_scenario_name(scenario_name(kind)) == kind);
  CHECK(parse_scenario_name("colored_radon") == ScenarioKind::colored_radon);
  CHECK(parse_scenario_name("mixed_A") == ScenarioKind::mixed_A);
  CHECK(parse_scenario_name("mixed-b") == ScenarioKind::mixed_B);
  CHECK_THROWS_AS(parse_scenario_name("K3333"), ParameterError);
  CHECK_THROWS_AS(parse_scenario_name("k333"), ParameterError);
  CHECK(scenario_catalogue().size() == 9);
}

TEST_CASE("class size plans") {
  CHECK(class_size_plan(resolve_scenario(spec(ScenarioKind::colored_radon, 0, 2))) ==
        std::vector<std::size_t>{3, 1, 1});
  CHECK(class_size_plan(resolve_scenario(spec(ScenarioKind::k1, 3, 2))) == std::vector<std::size_t>{2, 2, 5});
  CHECK(class_size_plan(resolve_scenario(spec(ScenarioKind::k1, 2, 3))) == std::vector<std::size_t>{1, 1, 1, 3});
  CHECK(class_size_plan(resolve_scenario(spec(ScenarioKind::mixed_A, 3, 2, 1, 2))) ==
        std::vector<std::size_t>{2, 2, 5});
  auto b = resolve_scenario(spec(ScenarioKind::mixed_B, 0, 4, 7, 0, 3));
  CHECK(b.r == 5);
  CHECK(class_size_plan(b) == std::vector<std::size_t>(7, 3));
  CHECK(class_size_plan(resolve_scenario(spec(ScenarioKind::K4444))) == std::vector<std::size_t>{4, 4, 4, 4});
  auto classic = resolve_scenario(spec(ScenarioKind::classic_tverberg, 3, 2));
  CHECK(class_size_plan(classic) == std::vector<std::size_t>(7, 1));
  auto k555 = resolve_scenario(spec(ScenarioKind::K555, 9, 9));
  CHECK(k555.r == 3);
  CHECK(k555.d == 3);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(resolve_scenario(spec(ScenarioKind::k1, 4, 2)), ParameterError);
  CHECK_THROWS_AS(resolve_scenario(spec(ScenarioKind::mixed_A, 3, 2, 2, 0)), ParameterError);
  CHECK_THROWS_AS(resolve_scenario(spec(ScenarioKind::mixed_B, 0, 4, 6, 0, 3)), ParameterError);
  CHECK_THROWS_AS(resolve_scenario(spec(ScenarioKind::mixed_B, 0, 4, 9, 0, 5)), ParameterError);  // r = 9
  CHECK_THROWS_AS(resolve_scenario(spec(ScenarioKind::colored_radon, 0, 0)), ParameterError);
  auto zero_budget = spec(ScenarioKind::K33);
  zero_budget.budget = 0;
  CHECK_THROWS_AS(resolve_scenario(zero_budget), ParameterError);

  auto radon = spec(ScenarioKind::colored_radon, 0, 1);
  CHECK_THROWS_AS(run_scenario(radon, random_config(1, {2, 2}, 1)), ParameterError);
  CHECK_THROWS_AS(run_scenario(radon, random_config(2, {3, 1, 1}, 1)), ParameterError);
}

TEST_CASE("colored radon on the line example") {
  ColoredConfig c(1, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{5}, 1}});
  auto report = run_scenario(spec(ScenarioKind::colored_radon, 0, 1), c);
  CHECK(report.outcome == ScenarioOutcome::found);
  CHECK(report.found() == std::optional<bool>(true));
  REQUIRE(report.partition.has_value());
  CHECK(report.partition->blocks == std::vector<std::vector<std::size_t>>{{1, 3}, {2}});
  CHECK(report.certificate->point == std::vector<Rational>{2});
  CHECK(verify_certificate(c, *report.partition, *report.certificate));
  CHECK(report.plan == std::vector<std::size_t>{3, 1});
}

TEST_CASE("seeded exhaustive runs always find a certificate") {
  const std::vector<ScenarioSpec> specs{spec(ScenarioKind::colored_radon, 0, 2), spec(ScenarioKind::K33),
                                        spec(ScenarioKind::K333), spec(ScenarioKind::k1, 2, 2),
                                        spec(ScenarioKind::mixed_A, 3, 2, 1, 2),
                                        spec(ScenarioKind::classic_tverberg, 3, 2)};
  for (const auto& s : specs)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto report = run_scenario(s, seed);
      CAPTURE(report.scenario);
      CAPTURE(seed);
      CHECK(report.outcome == ScenarioOutcome::found);
      CHECK(report.config_seed == std::optional<std::uint64_t>(seed));
      auto config = random_config(report.spec.d, report.plan, seed);
      CHECK(verify_certificate(config, *report.partition, *report.certificate));
    }
}

TEST_CASE("degenerate configurations need no special casing") {
  // three collinear red points and a blue point on the same line, in the plane
  ColoredConfig c(2, {{{0, 0}, 0}, {{1, 1}, 0}, {{2, 2}, 0}, {{3, 3}, 1}, {{3, 3}, 2}});
  auto report = run_scenario(spec(ScenarioKind::colored_radon, 0, 2), c);
  CHECK(report.outcome == ScenarioOutcome::found);
}

TEST_CASE("budget exhaustion is inconclusive, never refuted") {
  // find a seed whose first maximal partition fails, then cap the budget at one call
  bool exercised = false;
  for (std::uint64_t seed = 0; seed < 50 && !exercised; ++seed) {
    auto full = run_scenario(spec(ScenarioKind::K333), seed);
    if (full.lp_calls < 2) continue;
    auto capped = spec(ScenarioKind::K333);
    capped.budget = 1;
    auto report = run_scenario(capped, seed);
    CHECK(report.outcome == ScenarioOutcome::inconclusive);
    CHECK_FALSE(report.found().has_value());
    CHECK(report.lp_calls == 1);
    exercised = true;
  }
  CHECK(exercised);
}

TEST_CASE("stochastic mode") {
  auto s = spec(ScenarioKind::K333);
  s.mode = SearchMode::stochastic;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    s.search_seed = seed;
    auto report = run_scenario(s, seed);
    CHECK(report.outcome == ScenarioOutcome::found);
    auto again = run_scenario(s, seed);
    CHECK(again.partition == report.partition);
    CHECK(again.lp_calls == report.lp_calls);
  }
  s.budget = 1;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto report = run_scenario(s, seed);
    CHECK(report.outcome != ScenarioOutcome::refuted);
    CHECK(report.lp_calls <= 1);
  }
}
