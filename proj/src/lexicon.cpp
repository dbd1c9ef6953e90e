#include "radiolex/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "radiolex/error.hpp"

namespace radiolex {

std::vector<std::string> WordEntry::phonemes() const {
  std::vector<std::string> out;
  for (const Syllable& s : syllables) {
    out.insert(out.end(), s.onset.begin(), s.onset.end());
    out.insert(out.end(), s.nucleus.begin(), s.nucleus.end());
    out.insert(out.end(), s.coda.begin(), s.coda.end());
  }
  return out;
}

namespace {

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.pop_back();
  return line;
}

bool all_alpha(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalpha(c) != 0; });
}

std::string serialize_pronunciation(const WordEntry& entry) {
  std::string out;
  for (std::size_t i = 0; i < entry.syllables.size(); ++i) {
    if (i > 0) out += " . ";
    const Syllable& syl = entry.syllables[i];
    std::vector<std::string> tokens;
    tokens.insert(tokens.end(), syl.onset.begin(), syl.onset.end());
    for (std::size_t v = 0; v < syl.nucleus.size(); ++v) {
      std::string t = syl.nucleus[v];
      if (i == entry.stress_index && v == 0) t += '\'';
      tokens.push_back(std::move(t));
    }
    tokens.insert(tokens.end(), syl.coda.begin(), syl.coda.end());
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (t > 0) out += ' ';
      out += tokens[t];
    }
  }
  return out;
}

struct PronToken {
  std::string symbol;  // upper-cased, or "." for a syllable separator
  bool stressed = false;
};

}  // namespace

Syllabified syllabify(std::span<const std::string> phonemes, std::size_t stress_position,
                      const PhonemeInventory& inventory, std::size_t max_onset) {
  std::vector<bool> vowel(phonemes.size());
  for (std::size_t i = 0; i < phonemes.size(); ++i)
    vowel[i] = inventory.require(phonemes[i]).syllabic;

  // Nucleus runs: maximal stretches of adjacent vowels.
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [start, end)
  for (std::size_t i = 0; i < phonemes.size();) {
    if (!vowel[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < phonemes.size() && vowel[j]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  if (runs.empty()) throw Error("word has no vowel");
  if (stress_position >= phonemes.size() || !vowel[stress_position])
    throw Error("stress mark is not on a vowel");

  Syllabified result;
  result.syllables.resize(runs.size());
  for (std::size_t k = 0; k < runs.size(); ++k) {
    Syllable& syl = result.syllables[k];
    for (std::size_t i = runs[k].first; i < runs[k].second; ++i)
      syl.nucleus.push_back(phonemes[i]);
    if (stress_position >= runs[k].first && stress_position < runs[k].second)
      result.stress_index = k;
  }

  // Word-initial consonants all belong to the first onset, word-final ones to
  // the last coda. Each medial run splits maximal-onset: the following
  // syllable takes as many trailing consonants as legality allows.
  for (std::size_t i = 0; i < runs[0].first; ++i)
    result.syllables[0].onset.push_back(phonemes[i]);
  for (std::size_t i = runs.back().second; i < phonemes.size(); ++i)
    result.syllables.back().coda.push_back(phonemes[i]);
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    const std::size_t gap_begin = runs[k].second;
    const std::size_t gap_end = runs[k + 1].first;
    const std::size_t gap = gap_end - gap_begin;
    const std::size_t to_onset = std::min(gap, max_onset);
    for (std::size_t i = gap_begin; i < gap_end - to_onset; ++i)
      result.syllables[k].coda.push_back(phonemes[i]);
    for (std::size_t i = gap_end - to_onset; i < gap_end; ++i)
      result.syllables[k + 1].onset.push_back(phonemes[i]);
  }
  return result;
}

ParseResult parse_dictionary(std::string_view text, const PhonemeInventory& inventory,
                             const ParseOptions& options) {
  ParseResult result;
  std::vector<std::size_t> entry_lines;  // parallel to result.entries

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;

    auto fail = [&](std::string message) {
      result.diagnostics.push_back({lineno, Diagnostic::Severity::error, std::move(message)});
    };

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      fail("missing TAB between spelling and pronunciation");
      continue;
    }
    const std::string spelling = line.substr(0, tab);
    const std::string pron = line.substr(tab + 1);
    if (!all_alpha(spelling)) {
      fail("spelling '" + spelling + "' is not purely alphabetic");
      continue;
    }

    // Tokenize the pronunciation.
    std::vector<PronToken> tokens;
    std::size_t stress_marks = 0;
    bool bad = false;
    std::istringstream toks(pron);
    std::string tok;
    while (toks >> tok) {
      if (tok == ".") {
        tokens.push_back({".", false});
        continue;
      }
      PronToken t;
      if (tok.back() == '\'') {
        t.stressed = true;
        ++stress_marks;
        tok.pop_back();
      }
      t.symbol = to_upper(tok);
      const Phoneme* p = t.symbol.empty() ? nullptr : inventory.find(t.symbol);
      if (!p) {
        fail("unknown phoneme " + tok);
        bad = true;
        break;
      }
      if (t.stressed && !p->syllabic) {
        fail("stress mark on non-vowel " + t.symbol);
        bad = true;
        break;
      }
      tokens.push_back(std::move(t));
    }
    if (bad) continue;

    std::vector<std::string> phonemes;
    std::size_t stress_position = 0;
    bool has_dots = false;
    for (const PronToken& t : tokens) {
      if (t.symbol == ".") {
        has_dots = true;
        continue;
      }
      if (t.stressed) stress_position = phonemes.size();
      phonemes.push_back(t.symbol);
    }
    if (phonemes.empty()) {
      fail("empty pronunciation");
      continue;
    }
    if (stress_marks != 1) {
      fail(stress_marks == 0 ? "missing primary stress mark" : "multiple primary stress marks");
      continue;
    }

    WordEntry entry;
    entry.spelling = spelling;
    if (has_dots) {
      // Explicit syllable boundaries: each group must be consonants, then
      // vowels, then consonants.
      std::vector<std::vector<PronToken>> groups(1);
      bool malformed = false;
      for (const PronToken& t : tokens) {
        if (t.symbol == ".") {
          if (groups.back().empty()) {
            malformed = true;
            break;
          }
          groups.emplace_back();
        } else {
          groups.back().push_back(t);
        }
      }
      if (malformed || groups.back().empty()) {
        fail("empty syllable between dots");
        continue;
      }
      bool have_stress = false;
      for (std::size_t g = 0; g < groups.size() && !malformed; ++g) {
        Syllable syl;
        int phase = 0;  // 0 onset, 1 nucleus, 2 coda
        for (const PronToken& t : groups[g]) {
          const bool is_vowel = inventory.require(t.symbol).syllabic;
          if (is_vowel) {
            if (phase == 2) {
              malformed = true;
              break;
            }
            phase = 1;
            syl.nucleus.push_back(t.symbol);
          } else {
            if (phase == 0)
              syl.onset.push_back(t.symbol);
            else {
              phase = 2;
              syl.coda.push_back(t.symbol);
            }
          }
          if (t.stressed) {
            entry.stress_index = g;
            have_stress = true;
          }
        }
        if (syl.nucleus.empty()) malformed = true;
        if (malformed) break;
        entry.syllables.push_back(std::move(syl));
      }
      if (malformed) {
        fail("syllable is not consonants-vowels-consonants");
        continue;
      }
      (void)have_stress;  // guaranteed by stress_marks == 1
    } else {
      try {
        Syllabified syl = syllabify(phonemes, stress_position, inventory, options.max_onset);
        entry.syllables = std::move(syl.syllables);
        entry.stress_index = syl.stress_index;
      } catch (const Error& e) {
        fail(e.what());
        continue;
      }
    }

    entry_lines.push_back(lineno);
    result.entries.push_back(std::move(entry));
  }

  // Flag spellings that recur with differing pronunciations (these feed the
  // multiple-pronunciation filter).
  std::map<std::string, std::vector<std::size_t>> by_spelling;
  for (std::size_t i = 0; i < result.entries.size(); ++i)
    by_spelling[to_lower(result.entries[i].spelling)].push_back(i);
  for (const auto& [key, indexes] : by_spelling) {
    if (indexes.size() < 2) continue;
    std::vector<std::string> prons;
    for (std::size_t i : indexes) prons.push_back(serialize_pronunciation(result.entries[i]));
    std::sort(prons.begin(), prons.end());
    prons.erase(std::unique(prons.begin(), prons.end()), prons.end());
    if (prons.size() < 2) continue;
    for (std::size_t i : indexes) {
      result.diagnostics.push_back({entry_lines[i], Diagnostic::Severity::warning,
                                    "spelling '" + result.entries[i].spelling + "' has " +
                                        std::to_string(prons.size()) +
                                        " distinct pronunciations"});
    }
  }

  std::sort(result.diagnostics.begin(), result.diagnostics.end(),
            [](const Diagnostic& a, const Diagnostic& b) {
              return a.line != b.line ? a.line < b.line : a.message < b.message;
            });
  return result;
}

std::string format_diagnostic(const Diagnostic& d) {
  return d.message + " at line " + std::to_string(d.line);
}

ParseResult parse_dictionary_file(const std::string& path, const PhonemeInventory& inventory,
                                  const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read dictionary file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dictionary(buf.str(), inventory, options);
}

std::string serialize_entry(const WordEntry& entry) {
  return entry.spelling + "\t" + serialize_pronunciation(entry);
}

FrequencyMap parse_frequencies(std::string_view text) {
  FrequencyMap map;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    std::istringstream fields(line);
    std::string word, count, extra;
    if (!(fields >> word)) continue;
    if (!(fields >> count) || (fields >> extra) || !all_alpha(word) ||
        count.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("frequency file line " + std::to_string(lineno) +
                  ": expected `spelling count`");
    }
    map[to_lower(word)] = std::stoull(count);  // later duplicates overwrite
  }
  return map;
}

FrequencyMap load_frequencies(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read frequency file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_frequencies(buf.str());
}

VetoSet parse_veto(std::string_view text) {
  VetoSet set;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    std::istringstream fields(line);
    std::string word, extra;
    if (!(fields >> word)) continue;
    if (fields >> extra)
      throw Error("veto file line " + std::to_string(lineno) + ": expected a single word");
    set.insert(to_lower(word));
  }
  return set;
}

VetoSet load_veto(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read veto file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_veto(buf.str());
}

void apply_frequencies(std::vector<WordEntry>& entries, const FrequencyMap& frequencies) {
  for (WordEntry& e : entries) {
    auto it = frequencies.find(to_lower(e.spelling));
    if (it != frequencies.end()) e.frequency = it->second;
  }
}

}  // namespace radiolex
