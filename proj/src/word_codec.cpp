#include "radiolex/word_codec.hpp"

#include <cctype>

#include "radiolex/error.hpp"

namespace radiolex {

namespace {

const std::vector<TemplateField> kTwoSyllableLayout = {
    {"onset", 78},
    {"first_vowel", 52},
    {"middle_consonants", 52},
    {"second_vowel", 52},
    {"final_consonants", 52},
    {"initial_characters", 12},
    {"stressed_vowel", 52},
    {"stress_pattern", 7},
};

const std::vector<TemplateField> kThreeSyllableLayout = {
    {"onset", 78},
    {"first_vowel", 52},
    {"first_middle_consonants", 52},
    {"second_vowel", 52},
    {"second_middle_consonants", 52},
    {"third_vowel", 52},
    {"final_consonants", 52},
    {"initial_characters", 12},
    {"stressed_vowel", 52},
    {"stressed_onset", 52},
    {"stress_pattern", 7},
};

std::size_t syllable_count(TemplateKind kind) {
  return kind == TemplateKind::two_syllable ? 2 : 3;
}

/// Intervocalic cluster between syllable i and i+1: previous coda followed
/// by the next onset.
std::vector<std::string> middle_cluster(const WordEntry& entry, std::size_t i) {
  std::vector<std::string> cluster = entry.syllables[i].coda;
  const auto& next_onset = entry.syllables[i + 1].onset;
  cluster.insert(cluster.end(), next_onset.begin(), next_onset.end());
  return cluster;
}

/// Two-slot consonant field, silence padded.
BitVec encode_cluster_pair(const PhonemeInventory& inventory,
                           std::span<const std::string> cluster, std::string_view what) {
  if (cluster.size() > 2)
    throw Error(std::string(what) + " cluster longer than two consonants");
  BitVec bits;
  for (const std::string& symbol : cluster) bits.append(encode_phoneme(inventory, symbol).bits);
  for (std::size_t i = cluster.size(); i < 2; ++i) bits.append(silence_vector().bits);
  return bits;
}

BitVec encode_vowel_field(const PhonemeInventory& inventory, const Syllable& syl) {
  auto [first, second] = encode_nucleus(inventory, syl.nucleus);
  BitVec bits = first.bits;
  bits.append(second.bits);
  return bits;
}

}  // namespace

std::string_view template_name(TemplateKind kind) {
  return kind == TemplateKind::two_syllable ? "two_syllable" : "three_syllable";
}

const std::vector<TemplateField>& template_layout(TemplateKind kind) {
  return kind == TemplateKind::two_syllable ? kTwoSyllableLayout : kThreeSyllableLayout;
}

std::size_t template_width(TemplateKind kind) {
  std::size_t total = 0;
  for (const TemplateField& f : template_layout(kind)) total += f.width;
  return total;
}

std::size_t template_field_offset(TemplateKind kind, std::string_view field) {
  std::size_t offset = 0;
  for (const TemplateField& f : template_layout(kind)) {
    if (f.name == field) return offset;
    offset += f.width;
  }
  throw Error("unknown template field " + std::string(field));
}

std::optional<TemplateKind> template_of(const WordEntry& entry) {
  switch (entry.syllables.size()) {
    case 2: return TemplateKind::two_syllable;
    case 3: return TemplateKind::three_syllable;
    default: return std::nullopt;
  }
}

WordCode encode_word(const WordEntry& entry, TemplateKind kind,
                     const PhonemeInventory& inventory) {
  if (entry.syllables.size() != syllable_count(kind))
    throw Error("word '" + entry.spelling + "' has " + std::to_string(entry.syllables.size()) +
                " syllables, template wants " + std::to_string(syllable_count(kind)));
  if (entry.stress_index >= entry.syllables.size())
    throw Error("stress index out of range for '" + entry.spelling + "'");
  if (entry.spelling.size() < 2)
    throw Error("spelling '" + entry.spelling + "' shorter than two characters");

  WordCode code;
  code.kind = kind;
  BitVec& bits = code.bits;

  // Word onset, three slots: the word-initial phoneme twice (double weight),
  // then the second onset consonant.
  const auto& onset = entry.syllables.front().onset;
  if (onset.size() > 2) throw Error("onset cluster longer than two consonants");
  if (onset.empty()) {
    for (int i = 0; i < 3; ++i) bits.append(silence_vector().bits);
  } else {
    const BitVec first = encode_phoneme(inventory, onset[0]).bits;
    bits.append(first);
    bits.append(first);
    bits.append(onset.size() == 2 ? encode_phoneme(inventory, onset[1]).bits
                                  : silence_vector().bits);
  }

  // Alternating vowel and medial-consonant fields, then the final coda.
  std::vector<BitVec> vowel_fields;
  for (const Syllable& syl : entry.syllables)
    vowel_fields.push_back(encode_vowel_field(inventory, syl));
  for (std::size_t i = 0; i < entry.syllables.size(); ++i) {
    bits.append(vowel_fields[i]);
    if (i + 1 < entry.syllables.size())
      bits.append(encode_cluster_pair(inventory, middle_cluster(entry, i), "middle"));
  }
  bits.append(encode_cluster_pair(inventory, entry.syllables.back().coda, "final"));

  // First two characters of the spelling, case-folded, 6 bits each.
  for (std::size_t i = 0; i < 2; ++i) {
    const unsigned char c = static_cast<unsigned char>(entry.spelling[i]);
    if (!std::isalpha(c)) throw Error("spelling '" + entry.spelling + "' is not alphabetic");
    bits.append_value(static_cast<std::uint32_t>(std::tolower(c) - 'a'), 6);
  }

  // Stressed-syllable copies carry the double weight of the stressed vowel
  // (and, on the wider template, its onset cluster).
  bits.append(vowel_fields[entry.stress_index]);
  if (kind == TemplateKind::three_syllable)
    bits.append(encode_cluster_pair(inventory, entry.syllables[entry.stress_index].onset,
                                    "stressed onset"));

  // Stress position as a 7-bit thermometer: 0, 4 or 7 ones.
  static constexpr std::size_t kStressOnes[3] = {0, 4, 7};
  bits.append_run(true, kStressOnes[entry.stress_index]);
  bits.append_run(false, 7 - kStressOnes[entry.stress_index]);

  if (bits.size() != template_width(kind))
    throw Error("internal: code width mismatch");  // unreachable if layouts agree
  return code;
}

}  // namespace radiolex
