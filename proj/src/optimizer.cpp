#include "radiolex/optimizer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "radiolex/error.hpp"

namespace radiolex {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw Error("uniform_below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;  // multiple of n, rejection keeps draws unbiased
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

namespace {

template <typename T>
void shuffle_prefix(std::vector<T>& values, std::size_t prefix, std::mt19937_64& rng) {
  // Fisher-Yates; only the first `prefix` positions end up uniformly drawn.
  for (std::size_t i = 0; i < prefix && i + 1 < values.size(); ++i) {
    const std::size_t j = i + uniform_below(rng, values.size() - i);
    std::swap(values[i], values[j]);
  }
}

Fitness fitness_with(std::span<const std::uint32_t> members, auto&& distance) {
  Fitness f;
  bool first = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t d = distance(members[i], members[j]);
      if (first || d < f.min_distance) {
        f.min_distance = d;
        f.pairs_at_min = 1;
        first = false;
      } else if (d == f.min_distance) {
        ++f.pairs_at_min;
      }
    }
  }
  return f;
}

struct Member {
  std::vector<std::uint32_t> members;  // sorted
  Fitness fitness;
  std::uint64_t id = 0;  // creation order, breaks remaining fitness ties
};

struct Breeder {
  std::size_t pool_size;
  const GaConfig& config;
  std::vector<bool> locked_mask;
  std::vector<std::uint32_t> locked_sorted;
  std::mt19937_64 rng;
  std::uint64_t next_id = 0;

  std::vector<std::uint32_t> non_locked(const Member& m) const {
    std::vector<std::uint32_t> out;
    out.reserve(m.members.size() - locked_sorted.size());
    for (std::uint32_t idx : m.members)
      if (!locked_mask[idx]) out.push_back(idx);
    return out;
  }

  Member finish(std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    return Member{std::move(members), {}, next_id++};
  }

  Member random_individual() {
    std::vector<std::uint32_t> candidates;
    candidates.reserve(pool_size - locked_sorted.size());
    for (std::uint32_t i = 0; i < pool_size; ++i)
      if (!locked_mask[i]) candidates.push_back(i);
    const std::size_t need = config.subset_size - locked_sorted.size();
    shuffle_prefix(candidates, need, rng);
    std::vector<std::uint32_t> members(locked_sorted);
    members.insert(members.end(), candidates.begin(), candidates.begin() + need);
    return finish(std::move(members));
  }

  Member breed(const Member& a, const Member& b) {
    std::vector<bool> in_child(pool_size, false);
    std::vector<std::uint32_t> members(locked_sorted);
    for (std::uint32_t idx : members) in_child[idx] = true;

    // Trade members: a uniform random mix of both parents' non-locked words.
    std::vector<std::uint32_t> combined = non_locked(a);
    const std::vector<std::uint32_t> from_b = non_locked(b);
    combined.insert(combined.end(), from_b.begin(), from_b.end());
    shuffle_prefix(combined, combined.size(), rng);
    for (std::uint32_t idx : combined) {
      if (members.size() == config.subset_size) break;
      if (!in_child[idx]) {
        in_child[idx] = true;
        members.push_back(idx);
      }
    }
    // Top up from the whole pool when deduplication left the child short.
    while (members.size() < config.subset_size) {
      const auto idx = static_cast<std::uint32_t>(uniform_below(rng, pool_size));
      if (!in_child[idx]) {
        in_child[idx] = true;
        members.push_back(idx);
      }
    }

    mutate(members, in_child);
    return finish(std::move(members));
  }

  void mutate(std::vector<std::uint32_t>& members, std::vector<bool>& in_child) {
    std::vector<std::size_t> swappable;  // positions of non-locked members
    for (std::size_t pos = 0; pos < members.size(); ++pos)
      if (!locked_mask[members[pos]]) swappable.push_back(pos);
    const std::size_t swaps = std::min(config.mutation_swaps, swappable.size());
    for (std::size_t s = 0; s < swaps; ++s) {
      if (members.size() >= pool_size) break;  // no replacements exist
      const std::size_t pick = uniform_below(rng, swappable.size());
      const std::size_t pos = swappable[pick];
      const std::uint32_t victim = members[pos];
      std::uint32_t replacement = victim;
      while (in_child[replacement])
        replacement = static_cast<std::uint32_t>(uniform_below(rng, pool_size));
      in_child[victim] = false;
      in_child[replacement] = true;
      members[pos] = replacement;
    }
  }
};

}  // namespace

Fitness evaluate_fitness(std::span<const std::uint32_t> members, const DistanceMatrix& distances) {
  return fitness_with(members,
                      [&](std::uint32_t i, std::uint32_t j) { return distances.at(i, j); });
}

Fitness evaluate_fitness(std::span<const std::uint32_t> members, std::span<const WordCode> codes) {
  return fitness_with(members, [&](std::uint32_t i, std::uint32_t j) {
    return codes[i].bits.hamming(codes[j].bits);
  });
}

EvolveResult evolve(std::span<const WordCode> pool, const GaConfig& config) {
  if (config.subset_size < 2) throw Error("subset_size must be at least 2");
  if (pool.size() < config.subset_size)
    throw Error("pool has " + std::to_string(pool.size()) + " words, subset_size is " +
                std::to_string(config.subset_size));
  if (config.population_size == 0) throw Error("population_size must be positive");
  if (config.elitism_count >= config.population_size)
    throw Error("elitism_count must be smaller than population_size");

  Breeder breeder{pool.size(), config, std::vector<bool>(pool.size(), false), {},
                  std::mt19937_64(config.rng_seed)};
  for (std::uint32_t idx : config.locked) {
    if (idx >= pool.size()) throw Error("locked index " + std::to_string(idx) + " out of range");
    if (!breeder.locked_mask[idx]) {
      breeder.locked_mask[idx] = true;
      breeder.locked_sorted.push_back(idx);
    }
  }
  std::sort(breeder.locked_sorted.begin(), breeder.locked_sorted.end());
  if (breeder.locked_sorted.size() > config.subset_size)
    throw Error("more locked words than subset_size");

  EvolveResult result;

  // A pool with duplicate codes makes fitness 0 reachable; legal, but worth
  // a warning.
  {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
    for (std::size_t i = 0; i < pool.size(); ++i) by_hash[pool[i].bits.fnv1a()].push_back(i);
    std::size_t duplicate_pairs = 0;
    for (const auto& [hash, idxs] : by_hash) {
      if (idxs.size() < 2) continue;
      for (std::size_t x = 0; x < idxs.size(); ++x)
        for (std::size_t y = x + 1; y < idxs.size(); ++y)
          if (pool[idxs[x]].bits == pool[idxs[y]].bits) ++duplicate_pairs;
    }
    if (duplicate_pairs > 0)
      result.warnings.push_back("pool contains " + std::to_string(duplicate_pairs) +
                                " pairs of identical codes; minimum distance 0 is reachable");
  }

  // Cache pairwise distances for pools where the matrix is affordable.
  const bool use_matrix = pool.size() <= 4096;
  DistanceMatrix matrix;
  if (use_matrix) matrix = DistanceMatrix(pool);
  auto evaluate = [&](const std::vector<std::uint32_t>& members) {
    return use_matrix ? evaluate_fitness(members, matrix) : evaluate_fitness(members, pool);
  };

  std::vector<Member> population;
  population.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i)
    population.push_back(breeder.random_individual());

  Member best_ever;
  bool have_best = false;
  auto rank_order = [](const Member& a, const Member& b) {
    if (a.fitness != b.fitness) return a.fitness > b.fitness;
    return a.id < b.id;
  };

  auto check_population = [&]() {
    if (!config.check_invariants) return;
    for (const Member& m : population) {
      if (m.members.size() != config.subset_size)
        throw Error("invariant violated: individual size " + std::to_string(m.members.size()));
      for (std::size_t i = 0; i + 1 < m.members.size(); ++i)
        if (m.members[i] >= m.members[i + 1])
          throw Error("invariant violated: members not sorted-distinct");
      for (std::uint32_t idx : breeder.locked_sorted)
        if (!std::binary_search(m.members.begin(), m.members.end(), idx))
          throw Error("invariant violated: locked word missing from an individual");
    }
  };

  for (std::size_t generation = 0; generation <= config.generations; ++generation) {
    check_population();
    for (Member& m : population) m.fitness = evaluate(m.members);
    std::sort(population.begin(), population.end(), rank_order);

    const Member& top = population.front();
    if (!have_best || top.fitness > best_ever.fitness) {
      best_ever = top;
      have_best = true;
    }
    result.trace.push_back({generation, best_ever.fitness.min_distance,
                            best_ever.fitness.pairs_at_min});
    if (generation == config.generations) break;

    // Elites survive unchanged; the rest of the next population are bred
    // from rank-proportionally selected parents.
    std::vector<Member> next(population.begin(), population.begin() + config.elitism_count);
    const std::size_t n = population.size();
    const std::uint64_t total_weight = static_cast<std::uint64_t>(n) * (n + 1) / 2;
    auto select_parent = [&]() -> const Member& {
      std::uint64_t draw = uniform_below(breeder.rng, total_weight);
      for (std::size_t rank = 0; rank < n; ++rank) {
        const std::uint64_t weight = n - rank;
        if (draw < weight) return population[rank];
        draw -= weight;
      }
      return population.back();  // unreachable
    };
    while (next.size() < config.population_size) {
      const Member& a = select_parent();
      const Member& b = select_parent();
      next.push_back(breeder.breed(a, b));
    }
    population = std::move(next);
  }

  result.best.members = best_ever.members;
  result.best.fitness = best_ever.fitness;
  return result;
}

std::string format_trace(std::span<const TraceRow> trace) {
  std::ostringstream out;
  for (const TraceRow& row : trace)
    out << row.generation << '\t' << row.best_min << '\t' << row.pairs_at_min << '\n';
  return out.str();
}

}  // namespace radiolex
