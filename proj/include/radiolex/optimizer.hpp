#ifndef RADIOLEX_OPTIMIZER_HPP
#define RADIOLEX_OPTIMIZER_HPP

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "radiolex/metric.hpp"
#include "radiolex/word_codec.hpp"

namespace radiolex {

/// Draw an integer uniformly from [0, n) using rejection sampling on raw
/// mt19937_64 output. Unlike std::uniform_int_distribution this is
/// bit-identical across standard library implementations, which keeps GA
/// runs reproducible from the seed alone.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Higher min distance wins; ties go to fewer pairs attaining the minimum.
struct Fitness {
  std::size_t min_distance = 0;
  std::size_t pairs_at_min = 0;

  friend bool operator==(const Fitness&, const Fitness&) = default;
  friend std::strong_ordering operator<=>(const Fitness& a, const Fitness& b) {
    if (a.min_distance != b.min_distance)
      return a.min_distance <=> b.min_distance;           // larger is better
    return b.pairs_at_min <=> a.pairs_at_min;             // fewer is better
  }
};

struct Individual {
  std::vector<std::uint32_t> members;  // sorted distinct pool indices
  Fitness fitness;
};

struct GaConfig {
  std::size_t subset_size = 256;
  std::size_t population_size = 50;
  std::size_t generations = 500;
  std::size_t elitism_count = 4;
  std::size_t mutation_swaps = 4;
  std::uint64_t rng_seed = 0;
  std::vector<std::uint32_t> locked;  // pool indices pinned into every individual
  /// Verify every individual (size, distinctness, locked inclusion) after
  /// each generation; throws Error on violation. Meant for tests.
  bool check_invariants = false;
};

struct TraceRow {
  std::size_t generation = 0;  // 0 = initial population
  std::size_t best_min = 0;
  std::size_t pairs_at_min = 0;
};

struct EvolveResult {
  Individual best;  // best ever seen
  std::vector<TraceRow> trace;
  std::vector<std::string> warnings;
};

/// Fitness of a member set = min pairwise distance over its codes plus the
/// count of pairs attaining it.
Fitness evaluate_fitness(std::span<const std::uint32_t> members, const DistanceMatrix& distances);
Fitness evaluate_fitness(std::span<const std::uint32_t> members, std::span<const WordCode> codes);

/// Evolve subset_size-element subsets of the pool towards a maximal smallest
/// pairwise distance. Each generation keeps the elitism_count fittest
/// individuals unchanged and refills the population with mutated children of
/// rank-proportionally selected parents; locked indices appear in every
/// individual. Fully deterministic given the seed. Throws Error when the
/// pool is smaller than subset_size or the config is inconsistent; duplicate
/// codes in the pool are permitted but reported in `warnings`.
EvolveResult evolve(std::span<const WordCode> pool, const GaConfig& config);

/// Render trace rows as `generation<TAB>best_min<TAB>pairs_at_min` lines.
std::string format_trace(std::span<const TraceRow> trace);

}  // namespace radiolex

#endif
