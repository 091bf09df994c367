#pragma once

#include "chessdeg/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace chessdeg {

struct ColoredPoint {
  std::vector<Rational> coords;
  int color = 0;
};

/// Exact-rational point set in R^dim with a strict coloring: the colors used
/// are exactly 0..k.
class ColoredConfig {
 public:
  ColoredConfig() = default;
  /// Throws MalformedInput on a coordinate-length mismatch, a negative color,
  /// or a gap in the color range.
  ColoredConfig(int dim, std::vector<ColoredPoint> points);

  int dim() const { return dim_; }
  const std::vector<ColoredPoint>& points() const { return points_; }
  const ColoredPoint& point(std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  int color_count() const { return static_cast<int>(class_sizes_.size()); }
  /// Number of points of each color, indexed by color.
  const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }

 private:
  int dim_ = 0;
  std::vector<ColoredPoint> points_;
  std::vector<std::size_t> class_sizes_;
};

/// Parses {"dim": d, "points": [{"x": [...], "color": c}, ...]}; coordinates
/// may be JSON integers or strings "p", "p/q", "-1.25".
ColoredConfig parse_config(std::string_view json_text);

/// Integer coordinates drawn uniformly from [-bound, bound] with a seeded
/// 64-bit Mersenne Twister and rejection sampling, so a (seed, sizes, dim,
/// bound) tuple reproduces the same configuration on every platform.
/// Points are grouped by color in order.
ColoredConfig random_config(int dim, const std::vector<std::size_t>& class_sizes, std::uint64_t seed,
                            std::int64_t bound = 1000);

/// r pairwise disjoint, nonempty, multicolored index sets, ordered by their
/// smallest member. Points may be left unused.
struct RainbowPartition {
  std::vector<std::vector<std::size_t>> blocks;

  friend auto operator<=>(const RainbowPartition&, const RainbowPartition&) = default;
};

/// Checks the RainbowPartition invariants against a configuration.
bool is_valid_partition(const ColoredConfig& config, const RainbowPartition& partition, std::size_t r);

enum class PartitionFilter {
  all,       // every rainbow partition
  maximal,   // no unused point can join any block
  covering,  // every point used
};

/// Lazy enumeration of rainbow partitions into exactly r blocks.
///
/// Partitions are encoded as label strings (0 = unused, j = block j) in
/// restricted-growth form, i.e. block j opens before block j+1, and are
/// produced in increasing lexicographic order of that string, each exactly
/// once. Backtracking never puts two points of one color into one block.
class RainbowPartitionStream {
 public:
  RainbowPartitionStream(const ColoredConfig& config, std::size_t r, PartitionFilter filter = PartitionFilter::all);

  std::optional<RainbowPartition> next();

 private:
  bool admissible(std::size_t point, int label) const;
  void assign(std::size_t point, int label);
  void unassign(std::size_t point);
  bool accept_leaf() const;

  std::vector<int> colors_;
  std::size_t r_;
  PartitionFilter filter_;
  std::vector<int> labels_;                  // -1 = not yet tried
  std::vector<std::vector<char>> has_color_;  // [block][color]
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> remaining_of_color_;  // points of that color at positions >= cursor
  std::size_t opened_ = 0;
  std::size_t cursor_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Convex weights per block and the common point they all produce.
struct IntersectionCertificate {
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> weights;  // weights[j][t] for blocks[j][t]
};

struct CommonPointResult {
  std::optional<IntersectionCertificate> certificate;  // empty when infeasible
  Rational infeasibility;                              // 0 iff feasible
  std::size_t pivots = 0;

  bool feasible() const { return certificate.has_value(); }
};

/// Exact LP: convex weights on each block whose weighted barycenters all
/// coincide. Throws ParameterError on an empty block or a partition with
/// fewer than two blocks.
CommonPointResult common_point_lp(const ColoredConfig& config, const RainbowPartition& partition);

/// Re-checks nonnegativity, unit sums and every barycenter equation with
/// exact arithmetic, independently of the solver.
bool verify_certificate(const ColoredConfig& config, const RainbowPartition& partition,
                        const IntersectionCertificate& certificate);

enum class InequalityVariant { A, B };

/// A: (r-1)(d-l+1)+1 <= r k.   B: (r-1)(d-l+1)+1 <= p k, with r = 2p-1.
/// Throws ParameterError for nonpositive r, d or p, negative k or l, and for
/// variant B when r != 2p-1.
bool scenario_inequality(InequalityVariant variant, int r, int k, int l, int d, int p = 0);

}  // namespace chessdeg
