#include "chessdeg/errors.hpp"
#include "chessdeg/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace chessdeg;
using chessdeg::io::json;

TEST_CASE("complex round trip") {
  auto k = chessboard_complex(3, 2);
  auto doc = io::complex_to_json(k);
  CHECK(doc["name"] == "Delta_{3,2}");
  CHECK(doc["vertex_count"] == 6);
  CHECK(doc["labels"][0] == "(1,1)");
  CHECK(io::complex_from_json(doc) == k);

  auto minimal = io::complex_from_json(json::parse(R"({"facets": [[2, 0, 1], [0, 1]]})"));
  CHECK(minimal.facets() == std::vector<Simplex>{{0, 1, 2}});
  CHECK_THROWS_AS(io::complex_from_json(json::parse(R"({"facets": [[0, 0]]})")), MalformedInput);
  CHECK_THROWS_AS(io::complex_from_json(json::parse(R"({"facet": []})")), MalformedInput);
  CHECK_THROWS_AS(io::complex_from_json(json::parse(R"({"facets": "x"})")), MalformedInput);
}

TEST_CASE("matrix round trip uses strings") {
  IntegerMatrix m{{1, -2}, {0, 3}};
  m(0, 0) = BigInt("123456789012345678901234567890");
  auto doc = io::matrix_to_json(m);
  CHECK(doc["entries"][0][0] == "123456789012345678901234567890");
  CHECK(doc["entries"][0][1] == "-2");
  CHECK(io::matrix_from_json(doc) == m);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/2"]]})")), MalformedInput);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"rows":2,"cols":1,"entries":[["1"]]})")), MalformedInput);
}

TEST_CASE("config round trip") {
  auto c = random_config(2, {2, 1}, 9);
  auto back = io::config_from_json(io::config_to_json(c));
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(back.point(i).coords == c.point(i).coords);
    CHECK(back.point(i).color == c.point(i).color);
  }
  ColoredConfig frac(1, {{{Rational(1, 3)}, 0}});
  CHECK(io::config_to_json(frac)["points"][0]["x"][0] == "1/3");
}

TEST_CASE("degree and audit documents") {
  DegreeReport r;
  r.value = 2;
  r.residue_mod = std::make_pair(std::int64_t{3}, std::int64_t{2});
  auto doc = io::degree_to_json(r);
  CHECK(doc["degree"] == 2);
  CHECK(doc["method"] == "homological");
  CHECK(doc["mod"] == json::array({3, 2}));
  r.value = BigInt("1000000000000000000000");
  CHECK(io::degree_to_json(r)["degree"] == "1000000000000000000000");
}

TEST_CASE("scenario report document") {
  ColoredConfig c(1, {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{5}, 1}});
  ScenarioSpec s;
  s.d = 1;
  auto report = run_scenario(s, c);
  auto doc = io::scenario_report_to_json(report, false);
  CHECK(doc["scenario"] == "colored-radon");
  CHECK(doc["found"] == true);
  CHECK(doc["partition"] == json::parse("[[1,3],[2]]"));
  CHECK(doc["point"] == json::parse(R"(["2"])"));
  CHECK(doc["weights"] == json::parse(R"([["3/4","1/4"],["1"]])"));
  CHECK_FALSE(doc.contains("elapsed_ms"));
  CHECK(doc["seed"].is_null());
  CHECK(io::scenario_report_to_json(report, true).contains("elapsed_ms"));
}

TEST_CASE("maps, generators and files") {
  CHECK(io::vertex_map_from_json(json::parse(R"({"vertex_map":[0,0,1]})")) == std::vector<VertexId>{0, 0, 1});
  CHECK(io::generator_from_json(json::parse(R"({"generator":[1,0]})")) == VertexPermutation{1, 0});
  CHECK_THROWS_AS(io::vertex_map_from_json(json::parse(R"({"vertex_map":[-1]})")), MalformedInput);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), MalformedInput);

  const std::string path = "chessdeg_json_io_test.json";
  {
    std::ofstream out(path);
    out << "{ broken";
  }
  CHECK_THROWS_AS(io::read_json_file(path), MalformedInput);
  {
    std::ofstream out(path);
    out << R"({"a": 1})";
  }
  CHECK(io::read_json_file(path)["a"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("homology and chain documents") {
  HomologyProfile h;
  h.betti = {0, 0};
  h.torsion = {{}, {BigInt(2)}};
  auto doc = io::homology_to_json(h);
  CHECK(doc["betti"] == json::parse("[0,0]"));
  CHECK(doc["torsion"] == json::parse(R"([[],["2"]])"));

  auto k = build_complex({{0, 1}});
  IntegerChain c(1);
  c.add({0, 1}, -1);
  auto cd = io::chain_to_json(c, k);
  CHECK(cd["terms"][0]["coefficient"] == "-1");
}
