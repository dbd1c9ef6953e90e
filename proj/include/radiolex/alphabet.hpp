#ifndef RADIOLEX_ALPHABET_HPP
#define RADIOLEX_ALPHABET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "radiolex/filters.hpp"

namespace radiolex {

/// A pair of 256-word lists. Each list is alphabetized without regard to
/// case and a word's sorted position is its byte value; bytes at even
/// positions encode with the two-syllable list, odd positions with the
/// three-syllable list.
class Alphabet {
 public:
  static constexpr std::size_t kWords = 256;

  /// Validates and sorts; throws Error when a list is not exactly 256
  /// distinct words or a spelling appears in both lists (case-folded).
  Alphabet(std::vector<std::string> two_syllable, std::vector<std::string> three_syllable,
           std::vector<std::pair<std::string, std::string>> provenance = {});

  const std::vector<std::string>& list_two() const { return two_; }
  const std::vector<std::string>& list_three() const { return three_; }
  const std::vector<std::pair<std::string, std::string>>& provenance() const {
    return provenance_;
  }

  /// (list, byte) for a word, case-insensitive; list 0 = two-syllable.
  std::optional<std::pair<int, std::uint8_t>> lookup(std::string_view word) const;

 private:
  std::vector<std::string> two_, three_;
  std::vector<std::pair<std::string, std::string>> provenance_;
  std::unordered_map<std::string, std::pair<int, std::uint8_t>> index_;
};

std::vector<std::string> encode_bytes(std::span<const std::uint8_t> data, const Alphabet& alphabet);

struct DecodeError {
  enum class Kind { unknown_word, parity_violation, duplicate_adjacent, length_mismatch };
  std::size_t position = 0;  // word position; length_mismatch uses the sequence length
  Kind kind = Kind::unknown_word;
  std::string detail;
};

std::string_view decode_error_name(DecodeError::Kind kind);

/// Best-effort decode: errors are reported in-band and decoding continues.
struct DecodeReport {
  std::vector<std::uint8_t> bytes;
  std::vector<DecodeError> errors;  // positions strictly increasing

  bool ok() const { return errors.empty(); }
};

/// Case-insensitive lookup with alternating-list checking. The expected list
/// starts at two-syllable and flips after every recognized word; a word from
/// the wrong list is a parity_violation (or duplicate_adjacent when it
/// repeats the previous word) at its position, after which checking resyncs
/// on the word's actual list. Unknown words consume their position without
/// flipping parity or producing a byte. When expected_len is given, a
/// decoded byte count that differs from it appends a final length_mismatch.
DecodeReport decode_words(std::span<const std::string> words, const Alphabet& alphabet,
                          std::optional<std::size_t> expected_len = std::nullopt);

/// Sort, index and stamp two winner sets; counts and cross-list duplicates
/// are validated by the Alphabet constructor. `unresolved_flags` is the
/// cross-list derivational report; assembly refuses to proceed while any
/// remain.
Alphabet assemble_alphabet(std::vector<std::string> two_syllable,
                           std::vector<std::string> three_syllable,
                           std::span<const DerivationalFlag> unresolved_flags,
                           std::vector<std::pair<std::string, std::string>> provenance = {});

/// Text format: `# key: value` provenance header, then 256 lines of
/// `index<TAB>two_syllable_word<TAB>three_syllable_word`.
std::string format_alphabet_text(const Alphabet& alphabet);
/// JSON variant for programmatic consumers.
std::string format_alphabet_json(const Alphabet& alphabet);

/// Parse either format (sniffs a leading '{'); throws Error on structural
/// problems, IoError (file overload) when unreadable.
Alphabet parse_alphabet(std::string_view text);
Alphabet load_alphabet(const std::string& path);

/// Hex digit pairs with any whitespace between them ("5C 39 76", "5c3976").
/// Throws Error on non-hex characters or an odd digit count.
std::vector<std::uint8_t> parse_hex_bytes(std::string_view text);
std::string format_hex_bytes(std::span<const std::uint8_t> bytes);

}  // namespace radiolex

#endif
