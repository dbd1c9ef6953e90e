#ifndef RADIOLEX_FEATURE_CODEC_HPP
#define RADIOLEX_FEATURE_CODEC_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "radiolex/bitvec.hpp"
#include "radiolex/phoneme.hpp"

namespace radiolex {

/// 26-bit weighted feature encoding of one phoneme slot, laid out as
/// place(7) | manner(6) | height(5) | voicing(4) | syllabic | nasal |
/// lateral | rounded. Ordinal fields are thermometer codes (a prefix of
/// ones), so the Hamming distance between two values of one field equals
/// their ordinal difference; voicing is a single bit replicated four times
/// to carry its perceptual weight.
struct FeatureVector {
  static constexpr std::size_t kPlaceBits = 7;
  static constexpr std::size_t kMannerBits = 6;
  static constexpr std::size_t kHeightBits = 5;
  static constexpr std::size_t kVoicingBits = 4;
  static constexpr std::size_t kFlagBits = 4;  // syllabic, nasal, lateral, rounded
  static constexpr std::size_t kBits =
      kPlaceBits + kMannerBits + kHeightBits + kVoicingBits + kFlagBits;  // 26

  BitVec bits;

  bool operator==(const FeatureVector&) const = default;
};

FeatureVector encode_phoneme(const Phoneme& p);
/// Lookup by symbol; throws Error for symbols outside the inventory.
FeatureVector encode_phoneme(const PhonemeInventory& inventory, std::string_view symbol);

/// The all-zero slot used for absent phonemes (empty template positions).
FeatureVector silence_vector();

/// Hamming distance between two 26-bit slots.
std::size_t phoneme_distance(const FeatureVector& a, const FeatureVector& b);

/// Encode a syllable nucleus into its two vowel slots. Diphthong symbols
/// decompose into their two component vowels; a pure vowel fills both slots.
/// Throws Error when the expansion yields more than two vowels.
std::pair<FeatureVector, FeatureVector> encode_nucleus(const PhonemeInventory& inventory,
                                                       std::span<const std::string> nucleus);

}  // namespace radiolex

#endif
