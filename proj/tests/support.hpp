#ifndef RADIOLEX_TESTS_SUPPORT_HPP
#define RADIOLEX_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "radiolex/alphabet.hpp"
#include "radiolex/error.hpp"
#include "radiolex/lexicon.hpp"
#include "radiolex/optimizer.hpp"
#include "radiolex/phoneme.hpp"
#include "radiolex/word_codec.hpp"

namespace radiolex::test {

/// Parse one `spelling<TAB>pron` record; the line must be well formed.
inline WordEntry entry_from_line(const std::string& spelling, const std::string& pron) {
  const ParseResult parsed =
      parse_dictionary(spelling + "\t" + pron, PhonemeInventory::builtin());
  if (parsed.entries.size() != 1)
    throw Error("fixture line did not parse: " + spelling + "\t" + pron);
  return parsed.entries[0];
}

inline std::vector<std::string> consonant_symbols(const PhonemeInventory& inv) {
  std::vector<std::string> out;
  for (const Phoneme& p : inv.all())
    if (!p.syllabic) out.push_back(p.symbol);
  return out;
}

inline std::vector<std::string> vowel_symbols(const PhonemeInventory& inv, bool pure_only) {
  std::vector<std::string> out;
  for (const Phoneme& p : inv.all())
    if (p.syllabic && (!pure_only || !p.blend)) out.push_back(p.symbol);
  return out;
}

/// Random entry that satisfies every encoder precondition (template-sized
/// clusters and nuclei, alphabetic spelling of at least three letters).
inline WordEntry random_word_entry(std::mt19937_64& rng, std::size_t syllable_count,
                                   const PhonemeInventory& inv = PhonemeInventory::builtin()) {
  const auto consonants = consonant_symbols(inv);
  const auto vowels = vowel_symbols(inv, false);
  const auto pure_vowels = vowel_symbols(inv, true);
  auto pick = [&rng](const std::vector<std::string>& from) {
    return from[uniform_below(rng, from.size())];
  };

  WordEntry entry;
  const std::size_t letters = 3 + uniform_below(rng, 6);
  for (std::size_t i = 0; i < letters; ++i)
    entry.spelling.push_back(static_cast<char>('a' + uniform_below(rng, 26)));

  for (std::size_t s = 0; s < syllable_count; ++s) {
    Syllable syl;
    const std::size_t onset_len = uniform_below(rng, 3);  // 0..2; medial cluster = next onset
    for (std::size_t i = 0; i < onset_len; ++i) syl.onset.push_back(pick(consonants));
    if (uniform_below(rng, 10) < 7) {
      syl.nucleus.push_back(pick(vowels));
    } else {
      syl.nucleus.push_back(pick(pure_vowels));
      syl.nucleus.push_back(pick(pure_vowels));
    }
    if (s + 1 == syllable_count) {
      const std::size_t coda_len = uniform_below(rng, 3);
      for (std::size_t i = 0; i < coda_len; ++i) syl.coda.push_back(pick(consonants));
    }
    entry.syllables.push_back(std::move(syl));
  }
  entry.stress_index = uniform_below(rng, syllable_count);
  return entry;
}

inline WordCode random_word_code(std::mt19937_64& rng, TemplateKind kind) {
  const std::size_t syllables = kind == TemplateKind::two_syllable ? 2 : 3;
  return encode_word(random_word_entry(rng, syllables), kind, PhonemeInventory::builtin());
}

/// Deterministic distinct filler spellings: prefix + three base-26 letters.
inline std::vector<std::string> filler_words(char prefix, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string w(1, prefix);
    w.push_back(static_cast<char>('a' + (i / 676) % 26));
    w.push_back(static_cast<char>('a' + (i / 26) % 26));
    w.push_back(static_cast<char>('a' + i % 26));
    out.push_back(std::move(w));
  }
  return out;
}

/// Synthetic but fully valid alphabet (256 + 256 distinct words).
inline Alphabet fixture_alphabet() {
  return Alphabet(filler_words('d', Alphabet::kWords), filler_words('t', Alphabet::kWords));
}

/// Ten adjacent mid-list rows of the original PGPfone word lists (indexes
/// 111..120), embedded among fillers chosen to sort below and above them.
inline Alphabet sample_rows_alphabet() {
  const std::vector<std::string> two_sample = {"glucose",   "goggles", "goldfish", "granny",
                                               "gremlin",   "guidance", "hamlet",  "highchair",
                                               "hockey",    "hotdog"};
  const std::vector<std::string> three_sample = {"hesitate",  "hideaway",  "holiness",
                                                 "hurricane", "hydraulic", "impartial",
                                                 "impetus",   "inception", "indigo",
                                                 "inertia"};
  std::vector<std::string> two = filler_words('a', 111);   // sorts before "glucose"
  two.insert(two.end(), two_sample.begin(), two_sample.end());
  const auto two_tail = filler_words('z', Alphabet::kWords - two.size());
  two.insert(two.end(), two_tail.begin(), two_tail.end());

  std::vector<std::string> three = filler_words('b', 111);  // sorts before "hesitate"
  three.insert(three.end(), three_sample.begin(), three_sample.end());
  const auto three_tail = filler_words('y', Alphabet::kWords - three.size());
  three.insert(three.end(), three_tail.begin(), three_tail.end());

  return Alphabet(std::move(two), std::move(three));
}

}  // namespace radiolex::test

#endif
