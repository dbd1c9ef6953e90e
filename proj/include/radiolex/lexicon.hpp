#ifndef RADIOLEX_LEXICON_HPP
#define RADIOLEX_LEXICON_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "radiolex/phoneme.hpp"

namespace radiolex {

/// Onset consonants, nucleus vowels, coda consonants (phoneme symbols).
struct Syllable {
  std::vector<std::string> onset;
  std::vector<std::string> nucleus;
  std::vector<std::string> coda;

  bool operator==(const Syllable&) const = default;
};

struct WordEntry {
  std::string spelling;  // ASCII letters only
  std::vector<Syllable> syllables;
  std::size_t stress_index = 0;  // syllable carrying primary stress
  std::optional<std::uint64_t> frequency;

  /// Concatenation of all syllable segments, in order.
  std::vector<std::string> phonemes() const;

  bool operator==(const WordEntry&) const = default;
};

struct Diagnostic {
  enum class Severity { error, warning };
  std::size_t line = 0;  // 1-based input line
  Severity severity = Severity::error;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct ParseResult {
  std::vector<WordEntry> entries;
  std::vector<Diagnostic> diagnostics;  // sorted by input line
};

/// "unknown phoneme XX at line 1"
std::string format_diagnostic(const Diagnostic& d);

struct ParseOptions {
  /// Longest consonant cluster the maximal-onset rule may pull into a
  /// syllable onset when a line carries no explicit `.` separators.
  std::size_t max_onset = 3;
};

/// Parse a dictionary: one record per line, `spelling<TAB>PH PH' . PH PH`,
/// `'` suffixes the stressed nucleus vowel, `.` separates syllables, `#`
/// starts a comment. Malformed lines become diagnostics, never exceptions.
/// Entries whose spelling recurs with a different pronunciation are kept and
/// flagged with a warning diagnostic.
ParseResult parse_dictionary(std::string_view text, const PhonemeInventory& inventory,
                             const ParseOptions& options = {});

/// Reads and parses a dictionary file; throws IoError if unreadable.
ParseResult parse_dictionary_file(const std::string& path, const PhonemeInventory& inventory,
                                  const ParseOptions& options = {});

/// Maximal-onset syllabification of an undotted phoneme string.
/// `stress_position` indexes the stressed vowel within `phonemes`.
/// Throws Error when the sequence has no vowel or the position is not a vowel.
struct Syllabified {
  std::vector<Syllable> syllables;
  std::size_t stress_index = 0;
};
Syllabified syllabify(std::span<const std::string> phonemes, std::size_t stress_position,
                      const PhonemeInventory& inventory, std::size_t max_onset = 3);

/// Inverse of parsing: `spelling<TAB>PH PH' . PH` with dots between all
/// syllables and the stress tick on the first nucleus vowel of the stressed
/// syllable. parse(serialize(e)) reproduces e exactly.
std::string serialize_entry(const WordEntry& entry);

using FrequencyMap = std::unordered_map<std::string, std::uint64_t>;
using VetoSet = std::unordered_set<std::string>;

/// `spelling<SPACE>count` per line, `#` comments; keys are case-folded and
/// later duplicates overwrite earlier ones. Throws Error on malformed lines,
/// IoError (file overload) when unreadable.
FrequencyMap parse_frequencies(std::string_view text);
FrequencyMap load_frequencies(const std::string& path);

/// One spelling per line, `#` comments; case-folded union.
VetoSet parse_veto(std::string_view text);
VetoSet load_veto(const std::string& path);

/// Fill in WordEntry::frequency from a case-folded frequency map.
void apply_frequencies(std::vector<WordEntry>& entries, const FrequencyMap& frequencies);

}  // namespace radiolex

#endif
