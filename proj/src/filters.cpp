#include "radiolex/filters.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "radiolex/error.hpp"

namespace radiolex {

namespace {

std::string pronunciation_key(const WordEntry& entry) {
  std::string key;
  for (std::size_t i = 0; i < entry.syllables.size(); ++i) {
    if (i == entry.stress_index) key += '\'';
    key += '.';
    const Syllable& syl = entry.syllables[i];
    for (const auto& part : {&syl.onset, &syl.nucleus, &syl.coda})
      for (const std::string& p : *part) key += p + ' ';
  }
  return key;
}

/// Vowel slots a nucleus occupies once diphthongs are decomposed.
std::size_t nucleus_slots(const Syllable& syl, const PhonemeInventory& inventory) {
  std::size_t slots = 0;
  for (const std::string& symbol : syl.nucleus) {
    const Phoneme* p = inventory.find(symbol);
    slots += (p && p->blend) ? 2 : 1;
  }
  return slots;
}

bool clusters_fit(const WordEntry& entry, const PhonemeInventory& inventory,
                  std::size_t max_cluster) {
  if (entry.syllables.front().onset.size() > max_cluster) return false;
  if (entry.syllables.back().coda.size() > max_cluster) return false;
  for (std::size_t i = 0; i + 1 < entry.syllables.size(); ++i) {
    if (entry.syllables[i].coda.size() + entry.syllables[i + 1].onset.size() > max_cluster)
      return false;
  }
  for (const Syllable& syl : entry.syllables) {
    const std::size_t slots = nucleus_slots(syl, inventory);
    if (slots == 0 || slots > max_cluster) return false;
  }
  return true;
}

const std::array<std::string_view, static_cast<std::size_t>(FilterRule::kCount)> kRuleNames = {
    "syllable_count", "cluster_length", "ambiguity", "frequency", "veto", "spelling",
};

}  // namespace

std::string_view filter_rule_name(FilterRule rule) {
  return kRuleNames[static_cast<std::size_t>(rule)];
}

std::size_t FilterOutcome::total_rejected() const {
  return std::accumulate(rejections.begin(), rejections.end(), std::size_t{0});
}

FilterOutcome filter_candidates(std::span<const WordEntry> entries,
                                const PhonemeInventory& inventory, const FilterConfig& config) {
  // Entry counts per case-folded spelling and per pronunciation; a candidate
  // must be the only holder of both its spelling and its pronunciation.
  std::unordered_map<std::string, std::size_t> spelling_count;
  std::unordered_map<std::string, std::size_t> pron_count;
  for (const WordEntry& e : entries) {
    ++spelling_count[to_lower(e.spelling)];
    ++pron_count[pronunciation_key(e)];
  }

  FilterOutcome out;
  auto reject = [&out](FilterRule rule) {
    ++out.rejections[static_cast<std::size_t>(rule)];
  };

  for (const WordEntry& e : entries) {
    const std::size_t syllables = e.syllables.size();
    if (syllables != 2 && syllables != 3) {
      reject(FilterRule::syllable_count);
      continue;
    }
    if (!clusters_fit(e, inventory, config.max_cluster)) {
      reject(FilterRule::cluster_length);
      continue;
    }
    if (spelling_count[to_lower(e.spelling)] != 1 || pron_count[pronunciation_key(e)] != 1) {
      reject(FilterRule::ambiguity);
      continue;
    }
    if (config.frequencies) {
      auto it = config.frequencies->find(to_lower(e.spelling));
      if (it == config.frequencies->end() || it->second < config.min_freq ||
          it->second > config.max_freq) {
        reject(FilterRule::frequency);
        continue;
      }
    }
    if (config.veto.count(to_lower(e.spelling))) {
      reject(FilterRule::veto);
      continue;
    }
    if (e.spelling.size() < config.min_letters ||
        !std::all_of(e.spelling.begin(), e.spelling.end(),
                     [](unsigned char c) { return std::isalpha(c) != 0; })) {
      reject(FilterRule::spelling);
      continue;
    }
    (syllables == 2 ? out.pool_two : out.pool_three).push_back(e);
  }
  return out;
}

namespace {

const std::array<std::string_view, 11> kSuffixes = {
    "s", "es", "ed", "ing", "er", "est", "ist", "ists", "ness", "ly", "y",
};

bool is_suffix_token(std::string_view s) {
  return std::find(kSuffixes.begin(), kSuffixes.end(), s) != kSuffixes.end();
}

/// Case-folded forms to match against: the word itself plus, for words
/// ending in y, the y->i alternation ("holy" -> "holi" so "holiness"
/// matches).
std::vector<std::string> match_forms(const std::string& word) {
  std::vector<std::string> forms{to_lower(word)};
  if (forms[0].size() > 1 && forms[0].back() == 'y') {
    std::string alt = forms[0];
    alt.back() = 'i';
    forms.push_back(std::move(alt));
  }
  return forms;
}

std::optional<std::string> pair_reason(const std::string& a, const std::string& b) {
  const auto forms_a = match_forms(a);
  const auto forms_b = match_forms(b);
  for (const std::string& fa : forms_a) {
    for (const std::string& fb : forms_b) {
      const std::string_view shorter = fa.size() <= fb.size() ? fa : fb;
      const std::string_view longer = fa.size() <= fb.size() ? fb : fa;
      if (shorter.size() < longer.size() && longer.starts_with(shorter) &&
          is_suffix_token(longer.substr(shorter.size()))) {
        return "residue '" + std::string(longer.substr(shorter.size())) + "'";
      }
    }
  }
  // Shared stem of at least five letters with inflectional residues on both
  // sides (e.g. painter/painting).
  for (const std::string& fa : forms_a) {
    for (const std::string& fb : forms_b) {
      std::size_t lcp = 0;
      while (lcp < fa.size() && lcp < fb.size() && fa[lcp] == fb[lcp]) ++lcp;
      if (lcp >= 5 && lcp < fa.size() && lcp < fb.size() &&
          is_suffix_token(std::string_view(fa).substr(lcp)) &&
          is_suffix_token(std::string_view(fb).substr(lcp))) {
        return "shared stem '" + fa.substr(0, lcp) + "'";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<DerivationalFlag> derivational_pairs(std::span<const std::string> list_a,
                                                 std::span<const std::string> list_b) {
  std::vector<DerivationalFlag> flags;
  for (const std::string& a : list_a) {
    for (const std::string& b : list_b) {
      if (auto reason = pair_reason(a, b)) flags.push_back({a, b, *reason});
    }
  }
  std::sort(flags.begin(), flags.end());
  flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
  return flags;
}

}  // namespace radiolex
