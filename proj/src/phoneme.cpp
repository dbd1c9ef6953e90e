#include "radiolex/phoneme.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "radiolex/error.hpp"

namespace radiolex {

// Generated from data/phonemes.tsv at build time.
extern const char* kBuiltinInventoryTsv;

std::string to_upper(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::toupper(c)));
  return out;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

namespace {

int parse_ordinal(const std::string& token, int max, const std::string& what, std::size_t line) {
  if (token == "-") return 0;
  if (token.size() == 1 && token[0] >= '1' && token[0] <= '0' + max) return token[0] - '0';
  throw Error("inventory line " + std::to_string(line) + ": bad " + what + " '" + token + "'");
}

bool parse_flag(const std::string& token, const std::string& what, std::size_t line) {
  if (token == "0") return false;
  if (token == "1") return true;
  throw Error("inventory line " + std::to_string(line) + ": bad " + what + " '" + token + "'");
}

}  // namespace

PhonemeInventory PhonemeInventory::parse(std::string_view text) {
  PhonemeInventory inv;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string symbol;
    if (!(fields >> symbol)) continue;  // blank line

    std::string place, manner, height, voiced, syllabic, nasal, lateral, rounded;
    if (!(fields >> place >> manner >> height >> voiced >> syllabic >> nasal >> lateral >>
          rounded)) {
      throw Error("inventory line " + std::to_string(lineno) + ": expected 9 columns");
    }

    Phoneme p;
    p.symbol = to_upper(symbol);
    p.place = parse_ordinal(place, 7, "place", lineno);
    p.manner = parse_ordinal(manner, 6, "manner", lineno);
    if (p.manner == 0)
      throw Error("inventory line " + std::to_string(lineno) + ": manner is mandatory");
    p.height = parse_ordinal(height, 5, "height", lineno);
    p.voiced = parse_flag(voiced, "voiced", lineno);
    p.syllabic = parse_flag(syllabic, "syllabic", lineno);
    p.nasal = parse_flag(nasal, "nasal", lineno);
    p.lateral = parse_flag(lateral, "lateral", lineno);
    p.rounded = parse_flag(rounded, "rounded", lineno);

    if (p.syllabic != (p.height != 0))
      throw Error("inventory line " + std::to_string(lineno) +
                  ": syllabic phonemes carry a height, non-syllabic ones do not");

    std::string blend;
    if (fields >> blend) {
      auto plus = blend.find('+');
      if (plus == std::string::npos || plus == 0 || plus + 1 == blend.size())
        throw Error("inventory line " + std::to_string(lineno) + ": bad blend '" + blend + "'");
      p.blend = {to_upper(blend.substr(0, plus)), to_upper(blend.substr(plus + 1))};
    }
    std::string extra;
    if (fields >> extra)
      throw Error("inventory line " + std::to_string(lineno) + ": trailing token '" + extra + "'");

    if (inv.index_.count(p.symbol))
      throw Error("inventory line " + std::to_string(lineno) + ": duplicate symbol " + p.symbol);
    inv.index_.emplace(p.symbol, inv.phonemes_.size());
    inv.phonemes_.push_back(std::move(p));
  }

  for (const Phoneme& p : inv.phonemes_) {
    if (!p.blend) continue;
    for (const std::string& part : {p.blend->first, p.blend->second}) {
      const Phoneme* component = inv.find(part);
      if (!component) throw Error("blend " + p.symbol + " names unknown phoneme " + part);
      if (!component->syllabic || component->blend)
        throw Error("blend " + p.symbol + " component " + part + " must be a pure vowel");
    }
  }
  return inv;
}

PhonemeInventory PhonemeInventory::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read inventory file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const PhonemeInventory& PhonemeInventory::builtin() {
  static const PhonemeInventory inv = parse(kBuiltinInventoryTsv);
  return inv;
}

const Phoneme* PhonemeInventory::find(std::string_view symbol) const {
  auto it = index_.find(to_upper(symbol));
  return it == index_.end() ? nullptr : &phonemes_[it->second];
}

const Phoneme& PhonemeInventory::require(std::string_view symbol) const {
  const Phoneme* p = find(symbol);
  if (!p) throw Error("unknown phoneme " + std::string(symbol));
  return *p;
}

}  // namespace radiolex
