#include "chessdeg/geometry.hpp"

#include "chessdeg/errors.hpp"

namespace chessdeg {

RainbowPartitionStream::RainbowPartitionStream(const ColoredConfig& config, std::size_t r, PartitionFilter filter)
    : r_(r), filter_(filter) {
  if (r < 2) throw ParameterError("rainbow partitions need r >= 2");
  for (const auto& p : config.points()) colors_.push_back(p.color);
  const auto n = colors_.size();
  labels_.assign(n, -1);
  has_color_.assign(r + 1, std::vector<char>(config.color_count(), 0));
  block_sizes_.assign(r + 1, 0);
  remaining_of_color_.assign(config.color_count(), 0);
  for (int c : colors_) ++remaining_of_color_[c];
  if (n < r) done_ = true;
}

bool RainbowPartitionStream::admissible(std::size_t point, int label) const {
  const std::size_t n = colors_.size();
  const std::size_t after = n - point - 1;
  const int c = colors_[point];
  if (label == 0) {
    if (filter_ == PartitionFilter::covering) return false;
    if (r_ - opened_ > after) return false;
    if (filter_ == PartitionFilter::maximal) {
      // Every block must end up holding this color, or this point could join it.
      std::size_t holding = 0;
      for (std::size_t j = 1; j <= r_; ++j) holding += has_color_[j][c];
      if (r_ - holding > remaining_of_color_[c] - 1) return false;
    }
    return true;
  }
  const auto L = static_cast<std::size_t>(label);
  if (L > r_ || L > opened_ + 1) return false;
  if (has_color_[L][c]) return false;
  const std::size_t opened_after = std::max(opened_, L);
  return r_ - opened_after <= after;
}

void RainbowPartitionStream::assign(std::size_t point, int label) {
  labels_[point] = label;
  --remaining_of_color_[colors_[point]];
  if (label == 0) return;
  const auto L = static_cast<std::size_t>(label);
  has_color_[L][colors_[point]] = 1;
  ++block_sizes_[L];
  opened_ = std::max(opened_, L);
}

void RainbowPartitionStream::unassign(std::size_t point) {
  const int label = labels_[point];
  ++remaining_of_color_[colors_[point]];
  if (label <= 0) return;
  const auto L = static_cast<std::size_t>(label);
  has_color_[L][colors_[point]] = 0;
  if (--block_sizes_[L] == 0 && L == opened_) --opened_;
}

bool RainbowPartitionStream::accept_leaf() const {
  if (opened_ != r_) return false;
  if (filter_ != PartitionFilter::maximal) return true;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (labels_[i] != 0) continue;
    for (std::size_t j = 1; j <= r_; ++j)
      if (!has_color_[j][colors_[i]]) return false;
  }
  return true;
}

std::optional<RainbowPartition> RainbowPartitionStream::next() {
  if (done_) return std::nullopt;
  const std::size_t n = colors_.size();
  if (!started_) {
    started_ = true;
    cursor_ = 0;
  } else {
    cursor_ = n - 1;
  }
  while (true) {
    const std::size_t p = cursor_;
    int from = 0;
    if (labels_[p] >= 0) {
      from = labels_[p] + 1;
      unassign(p);
    }
    labels_[p] = -1;
    const int top = static_cast<int>(std::min(opened_ + 1, r_));
    int chosen = -1;
    for (int L = from; L <= top; ++L)
      if (admissible(p, L)) {
        chosen = L;
        break;
      }
    if (chosen < 0) {
      if (p == 0) {
        done_ = true;
        return std::nullopt;
      }
      cursor_ = p - 1;
      continue;
    }
    assign(p, chosen);
    if (p + 1 < n) {
      cursor_ = p + 1;
      continue;
    }
    if (accept_leaf()) {
      RainbowPartition out;
      out.blocks.resize(r_);
      for (std::size_t i = 0; i < n; ++i)
        if (labels_[i] > 0) out.blocks[labels_[i] - 1].push_back(i);
      return out;
    }
  }
}

}  // namespace chessdeg
