#ifndef RADIOLEX_WORD_CODEC_HPP
#define RADIOLEX_WORD_CODEC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radiolex/bitvec.hpp"
#include "radiolex/feature_codec.hpp"
#include "radiolex/lexicon.hpp"

namespace radiolex {

enum class TemplateKind { two_syllable, three_syllable };

std::string_view template_name(TemplateKind kind);

struct TemplateField {
  std::string_view name;
  std::size_t width;
};

/// Field layout of a template, in bit order. Two-syllable:
/// onset 78, first_vowel 52, middle_consonants 52, second_vowel 52,
/// final_consonants 52, initial_characters 12, stressed_vowel 52,
/// stress_pattern 7 (357 bits). Three-syllable inserts a second
/// middle-consonant field and a third vowel field and adds a stressed_onset
/// copy field before the stress pattern (513 bits).
const std::vector<TemplateField>& template_layout(TemplateKind kind);
std::size_t template_width(TemplateKind kind);  // 357 / 513
/// Bit offset of a named field; throws Error for unknown names.
std::size_t template_field_offset(TemplateKind kind, std::string_view field);

/// Fixed-width code for one word; codes of equal kind are directly
/// comparable bit for bit.
struct WordCode {
  TemplateKind kind = TemplateKind::two_syllable;
  BitVec bits;

  bool operator==(const WordCode&) const = default;
};

/// Template selection by syllable count; words outside 2-3 syllables are
/// rejected (nullopt).
std::optional<TemplateKind> template_of(const WordEntry& entry);

/// Map a word onto a template:
///  - onset field, 3 slots: word-initial consonant duplicated, then the
///    second onset consonant ([C1,C1,C2]); shorter onsets pad with silence
///  - one 2-slot vowel field per syllable (encode_nucleus)
///  - middle-consonant fields: the intervocalic cluster (previous coda +
///    next onset), 2 slots padded with silence; final field: last coda
///  - initial_characters: two 6-bit case-folded letter indexes ('a'=0)
///  - stressed_vowel: bit copy of the stressed syllable's vowel field;
///    three-syllable templates also copy the stressed syllable's onset
///    cluster into stressed_onset
///  - stress_pattern: 7-bit thermometer, 0/4/7 ones for stress on
///    syllable 1/2/3
/// Throws Error naming the violated constraint when the entry does not fit
/// (wrong syllable count, cluster longer than 2, nucleus wider than 2 slots,
/// spelling shorter than 2 letters, unknown phoneme).
WordCode encode_word(const WordEntry& entry, TemplateKind kind,
                     const PhonemeInventory& inventory);

}  // namespace radiolex

#endif
