#ifndef RADIOLEX_METRIC_HPP
#define RADIOLEX_METRIC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "radiolex/word_codec.hpp"

namespace radiolex {

/// Whole-word confusability distance: Hamming distance over the full code.
/// Throws Error when the codes use different templates (cross-list
/// distances are undefined).
std::size_t word_distance(const WordCode& a, const WordCode& b);

struct DistanceMatrixSummary {
  std::size_t min = 0;
  std::pair<std::size_t, std::size_t> argmin{0, 0};  // lexicographically smallest (i, j), i < j
  std::map<std::size_t, std::size_t> histogram;      // distance -> pair count
};

/// Exact minimum over all C(n,2) pairs. Throws Error for fewer than two
/// codes or mixed templates.
DistanceMatrixSummary min_pairwise(std::span<const WordCode> codes);

struct Neighbor {
  std::size_t index = 0;
  std::size_t distance = 0;

  bool operator==(const Neighbor&) const = default;
};

/// k nearest entries of `codes` to `query`, ascending distance, ties broken
/// by list index; k larger than the set returns everything.
std::vector<Neighbor> nearest_neighbors(const WordCode& query, std::span<const WordCode> codes,
                                        std::size_t k);

/// Optional precomputed pairwise distances keyed by list index, for tight
/// inner loops (the GA). Distances fit in 16 bits for both templates.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::span<const WordCode> codes);

  std::size_t size() const { return n_; }
  std::uint16_t at(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    return cells_[i * (2 * n_ - i - 1) / 2 + (j - i - 1)];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> cells_;  // upper triangle, row-major
};

}  // namespace radiolex

#endif
