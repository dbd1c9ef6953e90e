#include "radiolex/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "radiolex/error.hpp"
#include "radiolex/phoneme.hpp"

namespace radiolex {

namespace {

/// Alphabetize without regard to case; equal folds fall back to byte order
/// so sorting stays total and deterministic.
bool casefold_less(const std::string& a, const std::string& b) {
  const std::string fa = to_lower(a), fb = to_lower(b);
  return fa != fb ? fa < fb : a < b;
}

void sort_and_check_list(std::vector<std::string>& list, std::string_view which) {
  if (list.size() != Alphabet::kWords)
    throw Error(std::string(which) + " list has " + std::to_string(list.size()) +
                " words, need exactly " + std::to_string(Alphabet::kWords));
  std::sort(list.begin(), list.end(), casefold_less);
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    if (to_lower(list[i]) == to_lower(list[i + 1]))
      throw Error(std::string(which) + " list repeats word '" + list[i] + "'");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> two_syllable, std::vector<std::string> three_syllable,
                   std::vector<std::pair<std::string, std::string>> provenance)
    : two_(std::move(two_syllable)),
      three_(std::move(three_syllable)),
      provenance_(std::move(provenance)) {
  sort_and_check_list(two_, "two-syllable");
  sort_and_check_list(three_, "three-syllable");
  for (std::size_t i = 0; i < kWords; ++i) {
    index_.emplace(to_lower(two_[i]), std::pair{0, static_cast<std::uint8_t>(i)});
    auto [it, inserted] =
        index_.emplace(to_lower(three_[i]), std::pair{1, static_cast<std::uint8_t>(i)});
    if (!inserted) throw Error("word '" + three_[i] + "' appears in both lists");
  }
}

std::optional<std::pair<int, std::uint8_t>> Alphabet::lookup(std::string_view word) const {
  auto it = index_.find(to_lower(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> encode_bytes(std::span<const std::uint8_t> data,
                                      const Alphabet& alphabet) {
  std::vector<std::string> words;
  words.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& list = (i % 2 == 0) ? alphabet.list_two() : alphabet.list_three();
    words.push_back(list[data[i]]);
  }
  return words;
}

std::string_view decode_error_name(DecodeError::Kind kind) {
  switch (kind) {
    case DecodeError::Kind::unknown_word: return "unknown_word";
    case DecodeError::Kind::parity_violation: return "parity_violation";
    case DecodeError::Kind::duplicate_adjacent: return "duplicate_adjacent";
    case DecodeError::Kind::length_mismatch: return "length_mismatch";
  }
  return "?";
}

DecodeReport decode_words(std::span<const std::string> words, const Alphabet& alphabet,
                          std::optional<std::size_t> expected_len) {
  DecodeReport report;
  for (std::size_t pos = 0; pos < words.size(); ++pos) {
    const std::string& word = words[pos];
    const auto hit = alphabet.lookup(word);
    if (!hit) {
      // A lone typo costs one error, not a parity cascade: the unknown word
      // consumes its position but later words keep their position parity.
      report.errors.push_back(
          {pos, DecodeError::Kind::unknown_word, "'" + word + "' is in neither list"});
      continue;
    }
    const auto [list, byte] = *hit;
    const int expected_list = static_cast<int>(pos % 2);  // even positions draw list_two
    if (pos > 0 && to_lower(word) == to_lower(words[pos - 1])) {
      report.errors.push_back({pos, DecodeError::Kind::duplicate_adjacent,
                               "'" + word + "' repeats the previous word from the same list"});
    } else if (list != expected_list) {
      report.errors.push_back(
          {pos, DecodeError::Kind::parity_violation,
           std::string("expected a ") + (expected_list == 0 ? "two" : "three") +
               "-syllable-list word, got '" + word + "' from the " +
               (list == 0 ? "two" : "three") + "-syllable list"});
    }
    report.bytes.push_back(byte);
  }

  if (expected_len && report.bytes.size() != *expected_len) {
    report.errors.push_back({words.size(), DecodeError::Kind::length_mismatch,
                             "decoded " + std::to_string(report.bytes.size()) +
                                 " bytes, expected " + std::to_string(*expected_len)});
  }
  return report;
}

Alphabet assemble_alphabet(std::vector<std::string> two_syllable,
                           std::vector<std::string> three_syllable,
                           std::span<const DerivationalFlag> unresolved_flags,
                           std::vector<std::pair<std::string, std::string>> provenance) {
  if (!unresolved_flags.empty()) {
    std::string msg = "unresolved derivational pairs:";
    for (const DerivationalFlag& f : unresolved_flags)
      msg += " (" + f.word_a + ", " + f.word_b + ")";
    throw Error(msg);
  }
  return Alphabet(std::move(two_syllable), std::move(three_syllable), std::move(provenance));
}

std::string format_alphabet_text(const Alphabet& alphabet) {
  std::ostringstream out;
  out << "# radiolex alphabet\n";
  for (const auto& [key, value] : alphabet.provenance()) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < Alphabet::kWords; ++i)
    out << i << '\t' << alphabet.list_two()[i] << '\t' << alphabet.list_three()[i] << '\n';
  return out.str();
}

std::string format_alphabet_json(const Alphabet& alphabet) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  for (const auto& [key, value] : alphabet.provenance()) prov[key] = value;
  j["provenance"] = std::move(prov);
  j["two_syllable"] = alphabet.list_two();
  j["three_syllable"] = alphabet.list_three();
  return j.dump(2) + "\n";
}

namespace {

Alphabet parse_alphabet_text(std::string_view text) {
  std::vector<std::string> two, three;
  std::vector<std::pair<std::string, std::string>> provenance;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (auto colon = body.find(':'); colon != std::string::npos) {
        std::string key = body.substr(0, colon);
        std::string value = body.substr(colon + 1);
        auto trim = [](std::string& s) {
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
          while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(key);
        trim(value);
        if (!key.empty()) provenance.emplace_back(key, value);
      }
      continue;
    }
    std::istringstream fields(line);
    std::size_t index;
    std::string word_two, word_three, extra;
    if (!(fields >> index >> word_two >> word_three) || (fields >> extra))
      throw Error("alphabet line '" + line + "': expected `index two_word three_word`");
    if (index != row)
      throw Error("alphabet file indexes out of order: expected " + std::to_string(row) +
                  ", got " + std::to_string(index));
    two.push_back(word_two);
    three.push_back(word_three);
    ++row;
  }

  Alphabet alphabet(two, three, std::move(provenance));
  // The file is the interoperable artifact; its order must already be the
  // sorted index order.
  if (alphabet.list_two() != two || alphabet.list_three() != three)
    throw Error("alphabet file is not alphabetized; indexes would not match byte values");
  return alphabet;
}

Alphabet parse_alphabet_json(std::string_view text) {
  nlohmann::ordered_json j;  // keeps provenance key order
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("alphabet JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("two_syllable") || !j.contains("three_syllable"))
    throw Error("alphabet JSON: need two_syllable and three_syllable arrays");
  std::vector<std::string> two, three;
  std::vector<std::pair<std::string, std::string>> provenance;
  try {
    two = j.at("two_syllable").get<std::vector<std::string>>();
    three = j.at("three_syllable").get<std::vector<std::string>>();
    if (j.contains("provenance"))
      for (const auto& [key, value] : j.at("provenance").items())
        provenance.emplace_back(key, value.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("alphabet JSON: ") + e.what());
  }
  return Alphabet(std::move(two), std::move(three), std::move(provenance));
}

}  // namespace

Alphabet parse_alphabet(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_alphabet_json(text) : parse_alphabet_text(text);
  }
  throw Error("empty alphabet file");
}

Alphabet load_alphabet(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read alphabet file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_alphabet(buf.str());
}

std::vector<std::uint8_t> parse_hex_bytes(std::string_view text) {
  std::vector<int> digits;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower >= '0' && lower <= '9')
      digits.push_back(lower - '0');
    else if (lower >= 'a' && lower <= 'f')
      digits.push_back(lower - 'a' + 10);
    else
      throw Error("invalid hex character '" + std::string(1, c) + "'");
  }
  if (digits.size() % 2 != 0) throw Error("odd number of hex digits");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(digits.size() / 2);
  for (std::size_t i = 0; i < digits.size(); i += 2)
    bytes.push_back(static_cast<std::uint8_t>(digits[i] * 16 + digits[i + 1]));
  return bytes;
}

std::string format_hex_bytes(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i > 0) out += ' ';
    out += digits[bytes[i] >> 4];
    out += digits[bytes[i] & 0xF];
  }
  return out;
}

}  // namespace radiolex
