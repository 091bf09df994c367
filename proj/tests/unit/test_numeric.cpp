#include "chessdeg/errors.hpp"
#include "chessdeg/numeric.hpp"
#include "chessdeg/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace chessdeg;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("+2") == Rational(2));
  CHECK(parse_rational("123456789012345678901234567890") == Rational(BigInt("123456789012345678901234567890")));
  for (const char* bad : {"", "1/0", "abc", ".5", "-.5", "1/-2", "1.", ".5.", "1e5", "2/ 3", " 1", "--1", "1/2/3"})
    CHECK_THROWS_AS(parse_rational(bad), MalformedInput);
}

TEST_CASE("to_string") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(BigInt(-17)) == "-17");
}

TEST_CASE("permutation_sign") {
  CHECK(permutation_sign(std::vector<int>{0, 1, 2}) == 1);
  CHECK(permutation_sign(std::vector<int>{1, 0, 2}) == -1);
  CHECK(permutation_sign(std::vector<int>{1, 2, 0}) == 1);
  CHECK(permutation_sign(std::vector<int>{3, 2, 1, 0}) == 1);
  CHECK(permutation_sign(std::vector<int>{}) == 1);
}

TEST_CASE("mod_residue and is_prime") {
  CHECK(mod_residue(BigInt(-1), 3) == 2);
  CHECK(mod_residue(BigInt(-6), 3) == 0);
  CHECK(mod_residue(BigInt(24), 5) == 4);
  CHECK_THROWS(mod_residue(BigInt(1), 0));
  std::vector<int> primes;
  for (int n = -2; n < 30; ++n)
    if (is_prime(n)) primes.push_back(n);
  CHECK(primes == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("parallel_for covers every index once and rethrows") {
  for (unsigned threads : {1u, 2u, 5u}) {
    ParallelFor pool(threads);
    std::vector<std::atomic<int>> hits(100);
    pool(100, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(pool(10, [](std::size_t i) {
      if (i == 3) throw std::runtime_error("boom");
    }), std::runtime_error);
  }
  int count = 0;
  parallel_for(nullptr, 4, [&](std::size_t) { ++count; });
  CHECK(count == 4);
}
