#include "radiolex/metric.hpp"

#include <algorithm>

#include "radiolex/error.hpp"

namespace radiolex {

namespace {

void require_uniform_kind(std::span<const WordCode> codes) {
  for (const WordCode& c : codes) {
    if (c.kind != codes.front().kind)
      throw Error("codes mix templates; cross-list distances are undefined");
  }
}

}  // namespace

std::size_t word_distance(const WordCode& a, const WordCode& b) {
  if (a.kind != b.kind)
    throw Error("cannot compare a two_syllable code with a three_syllable code");
  return a.bits.hamming(b.bits);
}

DistanceMatrixSummary min_pairwise(std::span<const WordCode> codes) {
  if (codes.size() < 2) throw Error("min_pairwise needs at least two codes");
  require_uniform_kind(codes);

  DistanceMatrixSummary summary;
  bool first = true;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      const std::size_t d = codes[i].bits.hamming(codes[j].bits);
      ++summary.histogram[d];
      if (first || d < summary.min) {
        summary.min = d;
        summary.argmin = {i, j};
        first = false;
      }
    }
  }
  return summary;
}

std::vector<Neighbor> nearest_neighbors(const WordCode& query, std::span<const WordCode> codes,
                                        std::size_t k) {
  if (codes.empty()) throw Error("nearest_neighbors needs a nonempty set");
  require_uniform_kind(codes);
  if (query.kind != codes.front().kind)
    throw Error("query template differs from the set's template");

  std::vector<Neighbor> all(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    all[i] = {i, query.bits.hamming(codes[i].bits)};
  std::stable_sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  });
  if (k < all.size()) all.resize(k);
  return all;
}

DistanceMatrix::DistanceMatrix(std::span<const WordCode> codes) : n_(codes.size()) {
  require_uniform_kind(codes);
  cells_.resize(n_ < 2 ? 0 : n_ * (n_ - 1) / 2);
  std::size_t cell = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      cells_[cell++] = static_cast<std::uint16_t>(codes[i].bits.hamming(codes[j].bits));
}

}  // namespace radiolex
