#include "chessdeg/chessboard.hpp"
#include "chessdeg/homology.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace chessdeg;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, int bound, int zero_pct) {
  std::uniform_int_distribution<int> entry(-bound, bound), pct(0, 99);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pct(gen) < zero_pct ? 0 : entry(gen);
  return m;
}

SimplicialComplex projective_plane() {
  // minimal 6-vertex triangulation, vertices 0..5
  return build_complex({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

SimplicialComplex torus() {
  // 7-vertex Mobius torus
  std::vector<std::vector<VertexId>> f;
  for (VertexId i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_complex(f);
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto a = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(a.diagonal == std::vector<BigInt>{1, 6});
  CHECK(a.rank == 2);

  auto z = smith_normal_form(IntegerMatrix(3, 4));
  CHECK(z.diagonal.empty());
  CHECK(z.rank == 0);

  auto tri = build_complex({{0, 1}, {1, 2}, {0, 2}});
  auto d = smith_normal_form(boundary_matrix(tri, 1));
  CHECK(d.diagonal == std::vector<BigInt>{1, 1});
  CHECK(d.rank == 2);

  auto empty = smith_normal_form(IntegerMatrix(0, 5));
  CHECK(empty.rank == 0);

  auto big = smith_normal_form(IntegerMatrix{{4, 6}, {6, 4}});
  CHECK(big.diagonal == std::vector<BigInt>{2, 10});
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937_64 gen(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + gen() % 4, cols = 1 + gen() % 4;
    auto m = random_matrix(gen, rows, cols, 9, 30);
    auto snf = smith_normal_form(m, true);
    CHECK(snf.diagonal == oracle::invariant_factors_by_minors(m));
    for (std::size_t i = 1; i < snf.diagonal.size(); ++i) CHECK(snf.diagonal[i] % snf.diagonal[i - 1] == 0);
    REQUIRE(snf.left.has_value());
    REQUIRE(snf.right.has_value());
    CHECK(*snf.left * m * *snf.right == smith_diagonal_matrix(snf, rows, cols));
    CHECK(abs(determinant(*snf.left)) == 1);
    CHECK(abs(determinant(*snf.right)) == 1);
  }
}

TEST_CASE("smith transforms on boundary matrices") {
  auto k = chessboard_complex(4, 3);
  for (int q = 1; q <= 2; ++q) {
    auto m = boundary_matrix(k, q);
    auto snf = smith_normal_form(m, true);
    CHECK(*snf.left * m * *snf.right == smith_diagonal_matrix(snf, m.rows(), m.cols()));
    CHECK(abs(determinant(*snf.left)) == 1);
    CHECK(abs(determinant(*snf.right)) == 1);
  }
}

TEST_CASE("sparse and dense smith agree") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + gen() % 9, cols = 1 + gen() % 9;
    auto m = random_matrix(gen, rows, cols, trial % 2 ? 1 : 5, 60);
    SparseBoundary s;
    s.rows = rows;
    s.columns.resize(cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i)
        if (m(i, j) != 0) s.columns[j].push_back({i, static_cast<std::int64_t>(m(i, j))});
    CHECK(smith_normal_form(s).diagonal == smith_normal_form(m).diagonal);
  }
}

TEST_CASE("sparse smith survives word overflow") {
  const std::int64_t huge = std::int64_t{1} << 62;
  SparseBoundary s;
  s.rows = 3;
  s.columns = {{{0, 1}, {1, huge}}, {{0, huge}, {1, 1}, {2, 3}}, {{1, 2}, {2, huge}}};
  IntegerMatrix m(3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (auto [i, v] : s.columns[j]) m(i, j) = v;
  CHECK(smith_normal_form(s).diagonal == smith_normal_form(m).diagonal);
  CHECK(smith_normal_form(s).rank == 3);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntegerMatrix{{2, 1}, {1, 3}}) == 5);
  CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntegerMatrix{{1, 2}, {2, 4}}) == 0);
  std::mt19937_64 gen(3);
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(gen, 4, 4, 20, 10);
    std::vector<std::vector<BigInt>> rows(4, std::vector<BigInt>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rows[i][j] = m(i, j);
    CHECK(determinant(m) == oracle::det_small(rows));
  }
}

TEST_CASE("reduced homology of small complexes") {
  auto hex = homology(chessboard_complex(3, 2));
  CHECK(hex.betti == std::vector<std::int64_t>{0, 1});

  auto t = homology(chessboard_complex(4, 3));
  CHECK(t.betti == std::vector<std::int64_t>{0, 2, 1});
  for (const auto& tor : t.torsion) CHECK(tor.empty());

  for (int r = 2; r <= 6; ++r) {
    auto h = homology(simplex_skeleton(r, r - 1));
    std::vector<std::int64_t> expected(static_cast<std::size_t>(r - 1), 0);
    expected.back() = 1;
    CHECK(h.betti == expected);
  }

  auto two = homology(simplex_skeleton(2, 1));
  CHECK(two.betti == std::vector<std::int64_t>{1});
  auto two_unreduced = homology(simplex_skeleton(2, 1), false);
  CHECK(two_unreduced.betti == std::vector<std::int64_t>{2});
}

TEST_CASE("torsion is detected") {
  auto rp2 = homology(projective_plane());
  CHECK(rp2.betti == std::vector<std::int64_t>{0, 0, 0});
  CHECK(rp2.torsion[1] == std::vector<BigInt>{2});
  CHECK(rp2.torsion[0].empty());
  CHECK(rp2.torsion[2].empty());
  CHECK_FALSE(rp2.vanishes_through(1));
  CHECK(rp2.vanishes_through(0));

  auto tor = homology(torus());
  CHECK(tor.betti == std::vector<std::int64_t>{0, 2, 1});
}

TEST_CASE("max_dim truncates") {
  auto h = homology(chessboard_complex(4, 3), true, 1);
  CHECK(h.betti == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("Euler-Poincare") {
  std::vector<SimplicialComplex> ks{chessboard_complex(3, 3), chessboard_complex(4, 3), chessboard_complex(2, 5),
                                    projective_plane(), torus(), join(chessboard_complex(3, 2), simplex_skeleton(2, 1)),
                                    build_complex({{0, 1, 2}, {2, 3}, {4}})};
  for (const auto& k : ks) {
    auto h = homology(k, false);
    std::int64_t alt = 0;
    for (std::size_t q = 0; q < h.betti.size(); ++q) alt += (q % 2 ? -1 : 1) * h.betti[q];
    CHECK(alt == euler_characteristic(k));
    // reduced betti differs only in degree 0
    auto r = homology(k, true);
    CHECK(r.betti[0] + 1 == h.betti[0]);
  }
}

TEST_CASE("connectivity probe") {
  CHECK(connectivity_probe(chessboard_complex(3, 5), 2) >= 1);
  CHECK(connectivity_probe(chessboard_complex(2, 3), 1) >= 0);
  CHECK(connectivity_probe(cone(chessboard_complex(4, 3)), 2) == 2);
  CHECK(connectivity_probe(cone(projective_plane()), 3) == 3);
  CHECK(connectivity_probe(simplex_skeleton(2, 1), 0) == -1);
  CHECK(connectivity_probe(chessboard_complex(3, 2), 1) == 0);
}

TEST_CASE("homology vanishes below the connectivity bound") {
  int checked = 0;
  for (int s = 1; s <= 7; ++s)
    for (int t = s; t <= 7; ++t) {
      std::int64_t total = 0;
      for (auto f : oracle::chessboard_f_vector(s, t)) total += f;
      if (total > 50000) continue;
      const int nu = connectivity_bound(s, t);
      if (nu < 1) continue;
      auto h = homology(chessboard_complex(s, t), true, nu - 1);
      CAPTURE(s);
      CAPTURE(t);
      CHECK(h.vanishes_through(nu - 1));
      ++checked;
    }
  CHECK(checked >= 15);
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power_decomposition({BigInt(12)}) == std::vector<BigInt>{3, 4});
  CHECK(prime_power_decomposition({BigInt(2), BigInt(6)}) == std::vector<BigInt>{2, 2, 3});
  CHECK(prime_power_decomposition({}).empty());
}
