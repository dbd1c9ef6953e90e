#ifndef RADIOLEX_FILTERS_HPP
#define RADIOLEX_FILTERS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radiolex/lexicon.hpp"

namespace radiolex {

struct FilterConfig {
  std::size_t max_cluster = 2;  // onset/medial/final consonants and nucleus slots
  std::uint64_t min_freq = 1;
  std::uint64_t max_freq = 84;
  std::size_t min_letters = 3;
  bool auto_drop_derivational = false;
  /// When present, words with unknown frequency are rejected and known
  /// frequencies must fall within [min_freq, max_freq].
  std::optional<FrequencyMap> frequencies;
  VetoSet veto;
};

/// Rejection rules in evaluation order; a word is charged to the first rule
/// it violates.
enum class FilterRule : std::size_t {
  syllable_count = 0,  // not 2 or 3 syllables
  cluster_length,      // consonant cluster or nucleus wider than the template slots
  ambiguity,           // spelling or pronunciation occurs in more than one entry
  frequency,           // unknown or outside [min_freq, max_freq]
  veto,                // listed in the veto set
  spelling,            // shorter than min_letters or non-alphabetic
  kCount
};

std::string_view filter_rule_name(FilterRule rule);

struct FilterOutcome {
  std::vector<WordEntry> pool_two;    // 2-syllable survivors, input order
  std::vector<WordEntry> pool_three;  // 3-syllable survivors, input order
  std::array<std::size_t, static_cast<std::size_t>(FilterRule::kCount)> rejections{};

  std::size_t rejected(FilterRule rule) const {
    return rejections[static_cast<std::size_t>(rule)];
  }
  std::size_t total_rejected() const;
};

/// Reduce parsed entries to template-conforming, unambiguous candidates.
/// rejections[] + survivors always account for every input entry.
FilterOutcome filter_candidates(std::span<const WordEntry> entries,
                                const PhonemeInventory& inventory, const FilterConfig& config);

struct DerivationalFlag {
  std::string word_a;  // from the first list
  std::string word_b;  // from the second list
  std::string reason;

  auto operator<=>(const DerivationalFlag&) const = default;
};

/// Cross-list derivational relatives: case-folded prefix pairs whose residue
/// is a common inflectional suffix (final y/i alternation allowed), plus
/// pairs sharing a stem of at least five letters where both residues are
/// suffixes. Output is sorted and deterministic.
std::vector<DerivationalFlag> derivational_pairs(std::span<const std::string> list_a,
                                                 std::span<const std::string> list_b);

}  // namespace radiolex

#endif
