#include "chessdeg/geometry.hpp"

#include "chessdeg/errors.hpp"
#include "chessdeg/exact_lp.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace chessdeg {

ColoredConfig::ColoredConfig(int dim, std::vector<ColoredPoint> points) : dim_(dim), points_(std::move(points)) {
  if (dim < 1) throw MalformedInput("dimension must be positive");
  int max_color = -1;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (static_cast<int>(p.coords.size()) != dim)
      throw MalformedInput("point " + std::to_string(i) + " has " + std::to_string(p.coords.size()) +
                           " coordinates, expected " + std::to_string(dim));
    if (p.color < 0) throw MalformedInput("point " + std::to_string(i) + " has a negative color");
    max_color = std::max(max_color, p.color);
  }
  class_sizes_.assign(static_cast<std::size_t>(max_color + 1), 0);
  for (const auto& p : points_) ++class_sizes_[p.color];
  for (std::size_t c = 0; c < class_sizes_.size(); ++c)
    if (class_sizes_[c] == 0)
      throw MalformedInput("color " + std::to_string(c) + " is listed but unused (coloring must be strict)");
}

ColoredConfig random_config(int dim, const std::vector<std::size_t>& class_sizes, std::uint64_t seed,
                            std::int64_t bound) {
  if (bound < 0) throw ParameterError("coordinate bound must be non-negative");
  for (auto s : class_sizes)
    if (s == 0) throw ParameterError("color classes must be nonempty");
  std::mt19937_64 gen(seed);
  // Unbiased draw from [0, span) by rejection on the raw 64-bit output.
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  auto draw = [&]() -> std::int64_t {
    std::uint64_t u;
    do {
      u = gen();
    } while (u >= limit);
    return static_cast<std::int64_t>(u % span) - bound;
  };
  std::vector<ColoredPoint> points;
  for (std::size_t c = 0; c < class_sizes.size(); ++c)
    for (std::size_t i = 0; i < class_sizes[c]; ++i) {
      ColoredPoint p;
      p.color = static_cast<int>(c);
      for (int t = 0; t < dim; ++t) p.coords.emplace_back(draw());
      points.push_back(std::move(p));
    }
  return ColoredConfig(dim, std::move(points));
}

bool is_valid_partition(const ColoredConfig& config, const RainbowPartition& partition, std::size_t r) {
  if (partition.blocks.size() != r) return false;
  std::vector<char> used(config.size(), 0);
  std::size_t prev_min = 0;
  for (std::size_t j = 0; j < partition.blocks.size(); ++j) {
    const auto& block = partition.blocks[j];
    if (block.empty()) return false;
    if (!std::is_sorted(block.begin(), block.end())) return false;
    if (j > 0 && block.front() <= prev_min) return false;
    prev_min = block.front();
    std::vector<char> colors(config.color_count(), 0);
    for (std::size_t i : block) {
      if (i >= config.size() || used[i]) return false;
      used[i] = 1;
      const int c = config.point(i).color;
      if (colors[c]) return false;
      colors[c] = 1;
    }
  }
  return true;
}

CommonPointResult common_point_lp(const ColoredConfig& config, const RainbowPartition& partition) {
  const auto& blocks = partition.blocks;
  if (blocks.size() < 2) throw ParameterError("a common point needs at least two blocks");
  for (const auto& b : blocks) {
    if (b.empty()) throw ParameterError("empty block");
    for (std::size_t i : b)
      if (i >= config.size()) throw ParameterError("block index out of range");
  }
  const std::size_t r = blocks.size();
  const auto d = static_cast<std::size_t>(config.dim());
  std::vector<std::size_t> offset(r + 1, 0);
  for (std::size_t j = 0; j < r; ++j) offset[j + 1] = offset[j] + blocks[j].size();
  const std::size_t n = offset[r];

  // Rows: one unit-sum row per block, then d rows per block j >= 1 equating
  // its barycenter with block 0's.
  std::vector<std::vector<Rational>> a(r + d * (r - 1), std::vector<Rational>(n));
  std::vector<Rational> b(a.size());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t t = 0; t < blocks[j].size(); ++t) a[j][offset[j] + t] = 1;
    b[j] = 1;
  }
  for (std::size_t j = 1; j < r; ++j)
    for (std::size_t c = 0; c < d; ++c) {
      auto& row = a[r + (j - 1) * d + c];
      for (std::size_t t = 0; t < blocks[j].size(); ++t) row[offset[j] + t] = config.point(blocks[j][t]).coords[c];
      for (std::size_t t = 0; t < blocks[0].size(); ++t) row[offset[0] + t] = -config.point(blocks[0][t]).coords[c];
    }

  auto lp = solve_feasibility(a, b);
  CommonPointResult result;
  result.infeasibility = lp.infeasibility;
  result.pivots = lp.pivots;
  if (!lp.feasible) return result;

  IntersectionCertificate cert;
  cert.point.assign(d, Rational(0));
  cert.weights.resize(r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t t = 0; t < blocks[j].size(); ++t) cert.weights[j].push_back(lp.solution[offset[j] + t]);
  for (std::size_t t = 0; t < blocks[0].size(); ++t)
    for (std::size_t c = 0; c < d; ++c) cert.point[c] += cert.weights[0][t] * config.point(blocks[0][t]).coords[c];
  result.certificate = std::move(cert);
  return result;
}

bool verify_certificate(const ColoredConfig& config, const RainbowPartition& partition,
                        const IntersectionCertificate& certificate) {
  const auto d = static_cast<std::size_t>(config.dim());
  if (certificate.point.size() != d || certificate.weights.size() != partition.blocks.size()) return false;
  for (std::size_t j = 0; j < partition.blocks.size(); ++j) {
    const auto& block = partition.blocks[j];
    const auto& w = certificate.weights[j];
    if (block.empty() || w.size() != block.size()) return false;
    Rational total = 0;
    std::vector<Rational> combo(d);
    for (std::size_t t = 0; t < block.size(); ++t) {
      if (block[t] >= config.size() || w[t] < 0) return false;
      total += w[t];
      for (std::size_t c = 0; c < d; ++c) combo[c] += w[t] * config.point(block[t]).coords[c];
    }
    if (total != 1 || combo != certificate.point) return false;
  }
  return true;
}

bool scenario_inequality(InequalityVariant variant, int r, int k, int l, int d, int p) {
  if (r < 1 || d < 1) throw ParameterError("r and d must be positive");
  if (k < 0 || l < 0) throw ParameterError("k and l must be non-negative");
  const long lhs = static_cast<long>(r - 1) * (d - l + 1) + 1;
  if (variant == InequalityVariant::A) return lhs <= static_cast<long>(r) * k;
  if (p < 1) throw ParameterError("p must be positive");
  if (r != 2 * p - 1)
    throw ParameterError("variant B needs r = 2p-1, got r=" + std::to_string(r) + ", p=" + std::to_string(p));
  return lhs <= static_cast<long>(p) * k;
}

}  // namespace chessdeg
