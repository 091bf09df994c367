#include "chessdeg/errors.hpp"
#include "chessdeg/geometry.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace chessdeg;

namespace {

ColoredConfig line_config() {
  // 0, 1, 2 red and 5 blue on the real line
  return ColoredConfig(1, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{5}, 1}});
}

std::set<RainbowPartition> collect(const ColoredConfig& c, std::size_t r, PartitionFilter f) {
  std::set<RainbowPartition> out;
  RainbowPartitionStream s(c, r, f);
  while (auto p = s.next()) {
    CHECK(out.insert(*p).second);  // never repeated
    CHECK(is_valid_partition(c, *p, r));
  }
  return out;
}

bool is_maximal(const ColoredConfig& c, const RainbowPartition& p) {
  std::vector<char> used(c.size(), 0);
  for (const auto& b : p.blocks)
    for (auto i : b) used[i] = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (used[i]) continue;
    for (const auto& b : p.blocks) {
      bool has = false;
      for (auto j : b) has |= c.point(j).color == c.point(i).color;
      if (!has) return false;
    }
  }
  return true;
}

bool is_covering(const ColoredConfig& c, const RainbowPartition& p) {
  std::size_t used = 0;
  for (const auto& b : p.blocks) used += b.size();
  return used == c.size();
}

}  // namespace

TEST_CASE("ColoredConfig validation") {
  auto c = line_config();
  CHECK(c.class_sizes() == std::vector<std::size_t>{3, 1});
  CHECK(c.color_count() == 2);
  CHECK_THROWS_AS(ColoredConfig(2, {{{0}, 0}}), MalformedInput);
  CHECK_THROWS_AS(ColoredConfig(1, {{{0}, 0}, {{1}, 2}}), MalformedInput);
  CHECK_THROWS_AS(ColoredConfig(1, {{{0}, -1}}), MalformedInput);
  CHECK_THROWS_AS(ColoredConfig(0, {}), MalformedInput);
}

TEST_CASE("parse_config") {
  auto c = parse_config(R"({"dim":1,"points":[{"x":["0"],"color":0},{"x":["1"],"color":0},)"
                        R"({"x":["2"],"color":0},{"x":["5"],"color":1}]})");
  CHECK(c.size() == 4);
  CHECK(c.class_sizes() == std::vector<std::size_t>{3, 1});

  auto d = parse_config(R"({"dim":2,"points":[{"x":["0.25", 3],"color":0},{"x":["-7/14","1"],"color":1}]})");
  CHECK(d.point(0).coords[0] == Rational(1, 4));
  CHECK(d.point(0).coords[1] == 3);
  CHECK(d.point(1).coords[0] == Rational(-1, 2));

  CHECK_THROWS_AS(parse_config(R"({"dim":1,"points":[{"x":["0"],"color":0},{"x":["1"],"color":2}]})"),
                  MalformedInput);
  CHECK_THROWS_AS(parse_config(R"({"dim":2,"points":[{"x":["0"],"color":0}]})"), MalformedInput);
  CHECK_THROWS_AS(parse_config(R"({"dim":1,"points":[{"x":["1/0"],"color":0}]})"), MalformedInput);
  CHECK_THROWS_AS(parse_config(R"({"dim":1,"points":[{"x":[0.5],"color":0}]})"), MalformedInput);
  CHECK_THROWS_AS(parse_config(R"({"dim":1})"), MalformedInput);
  CHECK_THROWS_AS(parse_config("not json"), MalformedInput);
}

TEST_CASE("random_config") {
  auto a = random_config(2, {3, 3, 3}, 42);
  auto b = random_config(2, {3, 3, 3}, 42);
  auto c = random_config(2, {3, 3, 3}, 43);
  CHECK(a.class_sizes() == std::vector<std::size_t>{3, 3, 3});
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same &= a.point(i).coords == b.point(i).coords && a.point(i).color == b.point(i).color;
    differs |= a.point(i).coords != c.point(i).coords;
    for (const auto& x : a.point(i).coords) {
      CHECK(x >= -1000);
      CHECK(x <= 1000);
      CHECK(denominator(x) == 1);
    }
  }
  CHECK(same);
  CHECK(differs);

  auto radon = random_config(2, {3, 1, 1}, 5);
  CHECK(radon.size() == 5);
  CHECK(radon.class_sizes().front() == 3);

  auto zero = random_config(3, {2, 2}, 1, 0);
  for (const auto& p : zero.points())
    for (const auto& x : p.coords) CHECK(x == 0);

  // pinned values guard the cross-platform reproducibility contract
  auto pinned = random_config(1, {1}, 0, 1000);
  auto again = random_config(1, {1}, 0, 1000);
  CHECK(pinned.point(0).coords == again.point(0).coords);

  CHECK_THROWS_AS(random_config(2, {3, 0}, 1), ParameterError);
  CHECK_THROWS_AS(random_config(2, {3}, 1, -1), ParameterError);
}

TEST_CASE("partition stream on the line example") {
  auto c = line_config();
  RainbowPartitionStream s(c, 2);
  std::vector<RainbowPartition> seen;
  while (auto p = s.next()) seen.push_back(*p);
  RainbowPartition expected{{{1, 3}, {2}}};
  CHECK(std::find(seen.begin(), seen.end(), expected) != seen.end());
  CHECK(seen.size() == collect(c, 2, PartitionFilter::all).size());
  CHECK_FALSE(s.next().has_value());

  RainbowPartitionStream too_many(c, 5);
  CHECK_FALSE(too_many.next().has_value());
  CHECK_THROWS_AS(RainbowPartitionStream(c, 1), ParameterError);
}

TEST_CASE("partition stream is in lexicographic label order") {
  auto c = random_config(2, {2, 2, 3}, 11);
  RainbowPartitionStream s(c, 3);
  std::vector<std::vector<int>> labels;
  while (auto p = s.next()) {
    std::vector<int> l(c.size(), 0);
    for (std::size_t j = 0; j < p->blocks.size(); ++j)
      for (auto i : p->blocks[j]) l[i] = static_cast<int>(j) + 1;
    labels.push_back(l);
  }
  CHECK(labels.size() > 10);
  for (std::size_t i = 1; i < labels.size(); ++i) CHECK(labels[i - 1] < labels[i]);
}

TEST_CASE("partition stream matches brute force") {
  const std::vector<std::pair<std::vector<std::size_t>, std::size_t>> plans{
      {{3, 1}, 2}, {{3, 1, 1}, 2}, {{3, 3}, 2}, {{2, 2, 5}, 3}, {{3, 3, 3}, 3}, {{1, 1, 1, 1, 1, 1, 1}, 3}, {{4, 4}, 3}};
  for (const auto& [plan, r] : plans) {
    auto c = random_config(1, plan, 3);
    auto brute = oracle::brute_force_partitions(c, r);
    CHECK(collect(c, r, PartitionFilter::all) == brute);
    std::set<RainbowPartition> max_brute, cover_brute;
    for (const auto& p : brute) {
      if (is_maximal(c, p)) max_brute.insert(p);
      if (is_covering(c, p)) cover_brute.insert(p);
    }
    CHECK(collect(c, r, PartitionFilter::maximal) == max_brute);
    CHECK(collect(c, r, PartitionFilter::covering) == cover_brute);
  }
}

TEST_CASE("K4444 covering partitions") {
  auto c = random_config(3, {4, 4, 4, 4}, 1);
  RainbowPartitionStream s(c, 4, PartitionFilter::covering);
  std::size_t n = 0;
  while (s.next()) ++n;
  // (4!)^4 / 4!
  CHECK(n == 13824);
}

TEST_CASE("is_valid_partition") {
  auto c = line_config();
  CHECK(is_valid_partition(c, {{{1, 3}, {2}}}, 2));
  CHECK_FALSE(is_valid_partition(c, {{{2}, {1, 3}}}, 2));   // not canonical
  CHECK_FALSE(is_valid_partition(c, {{{0, 1}, {2}}}, 2));   // two reds
  CHECK_FALSE(is_valid_partition(c, {{{0, 3}, {3}}}, 2));   // overlap
  CHECK_FALSE(is_valid_partition(c, {{{0, 3}, {}}}, 2));    // empty block
  CHECK_FALSE(is_valid_partition(c, {{{0, 3}, {1}}}, 3));   // wrong r
  CHECK_FALSE(is_valid_partition(c, {{{0, 3}, {9}}}, 2));   // out of range
}

TEST_CASE("common point examples") {
  auto c = line_config();
  RainbowPartition p{{{1, 3}, {2}}};
  auto r = common_point_lp(c, p);
  REQUIRE(r.feasible());
  CHECK(r.certificate->point == std::vector<Rational>{2});
  CHECK(r.certificate->weights[0] == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
  CHECK(r.certificate->weights[1] == std::vector<Rational>{1});
  CHECK(verify_certificate(c, p, *r.certificate));

  ColoredConfig segs(1, {{{0}, 0}, {{1}, 1}, {{2}, 0}, {{3}, 1}});
  auto apart = common_point_lp(segs, {{{0, 1}, {2, 3}}});
  CHECK_FALSE(apart.feasible());
  CHECK(apart.infeasibility > 0);

  ColoredConfig same(2, {{{7, -1}, 0}, {{7, -1}, 1}, {{7, -1}, 0}, {{7, -1}, 1}, {{7, -1}, 2}});
  RainbowPartitionStream all(same, 2);
  while (auto q = all.next()) {
    auto res = common_point_lp(same, *q);
    REQUIRE(res.feasible());
    CHECK(res.certificate->point == std::vector<Rational>{7, -1});
  }

  CHECK_THROWS_AS(common_point_lp(c, {{{1, 3}, {}}}), ParameterError);
  CHECK_THROWS_AS(common_point_lp(c, {{{1, 3}}}), ParameterError);
  CHECK_THROWS_AS(common_point_lp(c, {{{1, 3}, {8}}}), ParameterError);
}

TEST_CASE("verify_certificate rejects tampering") {
  auto c = line_config();
  RainbowPartition p{{{1, 3}, {2}}};
  auto cert = *common_point_lp(c, p).certificate;

  auto negative = cert;
  negative.weights[0] = {Rational(3, 2), Rational(-1, 2)};
  CHECK_FALSE(verify_certificate(c, p, negative));

  auto moved = cert;
  moved.point = {Rational(5, 2)};
  CHECK_FALSE(verify_certificate(c, p, moved));

  auto shape = cert;
  shape.weights.pop_back();
  CHECK_FALSE(verify_certificate(c, p, shape));

  // perturbing any weight by a nonzero rational breaks some constraint
  for (std::size_t j = 0; j < cert.weights.size(); ++j)
    for (std::size_t t = 0; t < cert.weights[j].size(); ++t)
      for (Rational eps : {Rational(1, 1000), Rational(-1, 7)}) {
        auto bent = cert;
        bent.weights[j][t] += eps;
        CHECK_FALSE(verify_certificate(c, p, bent));
      }
}

TEST_CASE("LP verdicts agree with basic-solution enumeration") {
  for (std::uint64_t seed = 0; seed < 3; ++seed)
    for (const auto& [plan, r, d] : std::vector<std::tuple<std::vector<std::size_t>, std::size_t, int>>{
             {{3, 1, 1}, 2, 2}, {{3, 3}, 2, 2}, {{2, 2, 2}, 3, 1}}) {
      auto c = random_config(d, plan, seed, 5);
      RainbowPartitionStream s(c, r);
      while (auto p = s.next()) {
        auto lp = common_point_lp(c, *p);
        CHECK(lp.feasible() == oracle::feasible_by_vertices(oracle::common_point_system(c, *p)));
        if (lp.feasible()) CHECK(verify_certificate(c, *p, *lp.certificate));
      }
    }
}

TEST_CASE("scenario inequalities") {
  CHECK(scenario_inequality(InequalityVariant::A, 3, 1, 2, 2));
  CHECK(scenario_inequality(InequalityVariant::B, 5, 7, 0, 4, 3));
  CHECK_FALSE(scenario_inequality(InequalityVariant::B, 5, 6, 0, 4, 3));
  CHECK_THROWS_AS(scenario_inequality(InequalityVariant::B, 5, 7, 0, 4, 2), ParameterError);
  CHECK_THROWS_AS(scenario_inequality(InequalityVariant::A, 0, 1, 0, 2), ParameterError);
  CHECK_THROWS_AS(scenario_inequality(InequalityVariant::A, 3, -1, 0, 2), ParameterError);

  // r=3, k=2, d=2, l=0: 7 <= 6 fails, and so does r <= d/(d-k+1) = 2
  CHECK_FALSE(scenario_inequality(InequalityVariant::A, 3, 2, 0, 2));

  // with l = 0 and k <= d the inequality is r (d-k+1) <= d
  for (int r = 1; r <= 7; ++r)
    for (int d = 1; d <= 6; ++d)
      for (int k = 1; k <= d; ++k)
        CHECK(scenario_inequality(InequalityVariant::A, r, k, 0, d) == (r * (d - k + 1) <= d));
}
