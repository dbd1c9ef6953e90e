#ifndef RADIOLEX_PHONEME_HPP
#define RADIOLEX_PHONEME_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace radiolex {

/// One sound unit with its articulatory feature values. Ordinal features use
/// 0 for "absent" (consonants have no height). Diphthongs carry a two-vowel
/// decomposition used when encoding syllable nuclei.
struct Phoneme {
  std::string symbol;
  int place = 0;   // 1..7, 0 = none
  int manner = 0;  // 1..6
  int height = 0;  // 1..5, 0 = none
  bool voiced = false;
  bool syllabic = false;
  bool nasal = false;
  bool lateral = false;
  bool rounded = false;
  std::optional<std::pair<std::string, std::string>> blend;

  bool is_vowel() const { return syllabic; }
};

/// Validated table of phonemes, keyed by upper-cased symbol.
class PhonemeInventory {
 public:
  /// Parse the inventory format: one phoneme per line,
  /// `symbol place manner height voiced syllabic nasal lateral rounded`,
  /// `-` for absent height, optional trailing `V1+V2` blend column on
  /// diphthong rows, `#` comments. Throws Error on malformed rows or
  /// violated invariants (duplicate symbols, out-of-range ordinals,
  /// syllabic without height, blends naming unknown or non-pure vowels).
  static PhonemeInventory parse(std::string_view text);
  static PhonemeInventory load_file(const std::string& path);

  /// The inventory compiled into the library (see data/phonemes.tsv).
  static const PhonemeInventory& builtin();

  const Phoneme* find(std::string_view symbol) const;
  /// Like find() but throws Error for unknown symbols.
  const Phoneme& require(std::string_view symbol) const;

  const std::vector<Phoneme>& all() const { return phonemes_; }
  std::size_t size() const { return phonemes_.size(); }

 private:
  std::vector<Phoneme> phonemes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Upper-case ASCII copy, used for symbol lookups.
std::string to_upper(std::string_view s);
/// Lower-case ASCII copy, used for case-insensitive word keys.
std::string to_lower(std::string_view s);

}  // namespace radiolex

#endif
