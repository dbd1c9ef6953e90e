#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radiolex/alphabet.hpp"
#include "radiolex/error.hpp"
#include "radiolex/filters.hpp"
#include "radiolex/lexicon.hpp"
#include "radiolex/metric.hpp"
#include "radiolex/optimizer.hpp"
#include "radiolex/phoneme.hpp"
#include "radiolex/word_codec.hpp"

namespace {

using namespace radiolex;

constexpr std::uint64_t kDefaultSeed = 42;  // fixed so unseeded runs still reproduce

int exit_validation(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 1;
}

int exit_io(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("cannot write file: " + path);
}

std::uint64_t fnv64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

const PhonemeInventory& pick_inventory(const std::string& path,
                                       std::optional<PhonemeInventory>& storage) {
  if (path.empty()) return PhonemeInventory::builtin();
  storage = PhonemeInventory::load_file(path);
  return *storage;
}

void report_diagnostics(const ParseResult& parsed) {
  std::size_t errors = 0, warnings = 0;
  for (const Diagnostic& d : parsed.diagnostics)
    (d.severity == Diagnostic::Severity::error ? errors : warnings)++;
  if (parsed.diagnostics.empty()) return;
  std::cerr << "dictionary: " << errors << " malformed line(s), " << warnings
            << " flagged line(s)\n";
  const std::size_t shown = std::min<std::size_t>(parsed.diagnostics.size(), 20);
  for (std::size_t i = 0; i < shown; ++i)
    std::cerr << "  " << format_diagnostic(parsed.diagnostics[i]) << '\n';
  if (shown < parsed.diagnostics.size())
    std::cerr << "  ... " << (parsed.diagnostics.size() - shown) << " more\n";
}

std::string rejection_report(const FilterOutcome& outcome, std::size_t input_count) {
  std::ostringstream out;
  out << "input_entries\t" << input_count << '\n';
  for (std::size_t r = 0; r < outcome.rejections.size(); ++r)
    out << "rule_" << filter_rule_name(static_cast<FilterRule>(r)) << '\t'
        << outcome.rejections[r] << '\n';
  out << "survivors_two_syllable\t" << outcome.pool_two.size() << '\n';
  out << "survivors_three_syllable\t" << outcome.pool_three.size() << '\n';
  return out.str();
}

/// Winner-list files: `# key: value` header, then one word per line. The
/// first 256 words are the list, the rest are ranked backfill alternates.
struct WordListFile {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> words;
};

WordListFile read_word_list(const std::string& path) {
  WordListFile file;
  std::istringstream in(read_file(path));
  std::string line;
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
        if (!key.empty()) file.header.emplace_back(key, value);
      }
      continue;
    }
    std::istringstream fields(line);
    std::string word, extra;
    fields >> word;
    if (fields >> extra) throw Error(path + ": expected one word per line, got '" + line + "'");
    file.words.push_back(word);
  }
  return file;
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string dict, freq, veto, lock, out, trace, report, inventory;
  int template_syllables = 2;
  std::uint64_t seed = kDefaultSeed;
  std::size_t generations = 500;
  std::size_t population = 50;
  std::size_t subset = 256;
  std::size_t elitism = 4;
  std::size_t mutation_swaps = 4;
  std::uint64_t min_freq = 1;
  std::uint64_t max_freq = 84;
  std::size_t min_letters = 3;
  std::size_t max_cluster = 2;
};

int run_build(const BuildArgs& args) {
  std::optional<PhonemeInventory> storage;
  const PhonemeInventory& inventory = pick_inventory(args.inventory, storage);

  ParseResult parsed = parse_dictionary_file(args.dict, inventory);
  report_diagnostics(parsed);

  FilterConfig filter_config;
  filter_config.min_freq = args.min_freq;
  filter_config.max_freq = args.max_freq;
  filter_config.min_letters = args.min_letters;
  filter_config.max_cluster = args.max_cluster;
  if (!args.freq.empty()) {
    filter_config.frequencies = load_frequencies(args.freq);
    apply_frequencies(parsed.entries, *filter_config.frequencies);
  }
  if (!args.veto.empty()) filter_config.veto = load_veto(args.veto);

  const FilterOutcome outcome = filter_candidates(parsed.entries, inventory, filter_config);
  const std::vector<WordEntry>& pool_entries =
      args.template_syllables == 2 ? outcome.pool_two : outcome.pool_three;
  const TemplateKind kind =
      args.template_syllables == 2 ? TemplateKind::two_syllable : TemplateKind::three_syllable;
  std::cout << "pool: " << pool_entries.size() << " candidate " << args.template_syllables
            << "-syllable words (" << outcome.total_rejected() << " rejected)\n";

  if (pool_entries.size() < args.subset)
    throw Error("pool has " + std::to_string(pool_entries.size()) + " words, need at least " +
                std::to_string(args.subset));

  std::vector<WordCode> codes;
  codes.reserve(pool_entries.size());
  for (const WordEntry& e : pool_entries) codes.push_back(encode_word(e, kind, inventory));

  GaConfig ga;
  ga.subset_size = args.subset;
  ga.population_size = args.population;
  ga.generations = args.generations;
  ga.elitism_count = args.elitism;
  ga.mutation_swaps = args.mutation_swaps;
  ga.rng_seed = args.seed;
  if (!args.lock.empty()) {
    const VetoSet locked_spellings = parse_veto(read_file(args.lock));
    std::vector<std::string> missing;
    for (const std::string& want : locked_spellings) {
      bool found = false;
      for (std::size_t i = 0; i < pool_entries.size(); ++i) {
        if (to_lower(pool_entries[i].spelling) == want) {
          ga.locked.push_back(static_cast<std::uint32_t>(i));
          found = true;
          break;
        }
      }
      if (!found) missing.push_back(want);
    }
    if (!missing.empty()) {
      std::string msg = "locked words not in the candidate pool:";
      for (const std::string& w : missing) msg += " " + w;
      throw Error(msg);
    }
    std::sort(ga.locked.begin(), ga.locked.end());
  }

  const EvolveResult evolved = evolve(codes, ga);
  for (const std::string& w : evolved.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "best fitness: min=" << evolved.best.fitness.min_distance
            << " pairs_at_min=" << evolved.best.fitness.pairs_at_min << '\n';

  // Digest of everything that determines the output, for provenance stamps.
  std::ostringstream canon;
  canon << "template=" << args.template_syllables << ";seed=" << args.seed
        << ";generations=" << args.generations << ";population=" << args.population
        << ";subset=" << args.subset << ";elitism=" << args.elitism
        << ";mutation_swaps=" << args.mutation_swaps << ";min_freq=" << args.min_freq
        << ";max_freq=" << args.max_freq << ";min_letters=" << args.min_letters
        << ";max_cluster=" << args.max_cluster << ";dict=" << hex64(fnv64(read_file(args.dict)))
        << ";freq=" << (args.freq.empty() ? "-" : hex64(fnv64(read_file(args.freq))))
        << ";veto=" << (args.veto.empty() ? "-" : hex64(fnv64(read_file(args.veto))))
        << ";lock=" << (args.lock.empty() ? "-" : hex64(fnv64(read_file(args.lock))));
  const std::string config_digest = hex64(fnv64(canon.str()));

  std::vector<std::string> winners;
  std::vector<bool> is_member(codes.size(), false);
  for (std::uint32_t idx : evolved.best.members) {
    winners.push_back(pool_entries[idx].spelling);
    is_member[idx] = true;
  }
  auto casefold_less = [](const std::string& a, const std::string& b) {
    const std::string fa = to_lower(a), fb = to_lower(b);
    return fa != fb ? fa < fb : a < b;
  };
  std::sort(winners.begin(), winners.end(), casefold_less);

  // Runner-up words, ranked by how far they sit from the winning set; these
  // back-fill drops during assembly.
  struct Alternate {
    std::string spelling;
    std::size_t distance;
  };
  std::vector<Alternate> alternates;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (is_member[i]) continue;
    std::size_t best = 0;
    bool first = true;
    for (std::uint32_t m : evolved.best.members) {
      const std::size_t d = codes[i].bits.hamming(codes[m].bits);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
    alternates.push_back({pool_entries[i].spelling, best});
  }
  std::sort(alternates.begin(), alternates.end(),
            [&](const Alternate& a, const Alternate& b) {
              if (a.distance != b.distance) return a.distance > b.distance;
              return casefold_less(a.spelling, b.spelling);
            });

  std::ostringstream out;
  out << "# radiolex word list\n";
  out << "# template: " << args.template_syllables << '\n';
  out << "# seed: " << args.seed << '\n';
  out << "# config: " << config_digest << '\n';
  out << "# pool: " << pool_entries.size() << '\n';
  out << "# fitness: min=" << evolved.best.fitness.min_distance
      << " pairs_at_min=" << evolved.best.fitness.pairs_at_min << '\n';
  for (const std::string& w : winners) out << w << '\n';
  if (!alternates.empty()) {
    out << "# alternates (ranked by distance to the winning set)\n";
    for (const Alternate& a : alternates) out << a.spelling << '\n';
  }
  write_file(args.out, out.str());

  if (!args.trace.empty()) write_file(args.trace, format_trace(evolved.trace));
  if (!args.report.empty())
    write_file(args.report, rejection_report(outcome, parsed.entries.size()));
  std::cout << "wrote " << args.out << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// assemble
// ---------------------------------------------------------------------------

struct AssembleArgs {
  std::string two, three, out;
  bool auto_drop = false;
};

int run_assemble(const AssembleArgs& args) {
  WordListFile file_two = read_word_list(args.two);
  WordListFile file_three = read_word_list(args.three);
  for (auto* file : {&file_two, &file_three}) {
    if (file->words.size() < Alphabet::kWords)
      throw Error("word list has " + std::to_string(file->words.size()) +
                  " words, need at least " + std::to_string(Alphabet::kWords));
  }

  std::vector<std::string> list_two(file_two.words.begin(),
                                    file_two.words.begin() + Alphabet::kWords);
  std::vector<std::string> list_three(file_three.words.begin(),
                                      file_three.words.begin() + Alphabet::kWords);
  std::vector<std::string> spare_two(file_two.words.begin() + Alphabet::kWords,
                                     file_two.words.end());
  std::vector<std::string> spare_three(file_three.words.begin() + Alphabet::kWords,
                                       file_three.words.end());
  std::vector<std::string> dropped;

  auto in_either = [&](const std::string& w) {
    const std::string key = to_lower(w);
    auto matches = [&key](const std::string& x) { return to_lower(x) == key; };
    return std::any_of(list_two.begin(), list_two.end(), matches) ||
           std::any_of(list_three.begin(), list_three.end(), matches);
  };

  std::vector<DerivationalFlag> flags = derivational_pairs(list_two, list_three);
  while (!flags.empty()) {
    if (!args.auto_drop) {
      std::cerr << flags.size() << " cross-list derivational pair(s); rerun with --auto-drop or "
                   "edit the lists:\n";
      for (const DerivationalFlag& f : flags)
        std::cerr << "  " << f.word_a << " / " << f.word_b << " (" << f.reason << ")\n";
      return 1;
    }
    // Drop the base (shorter) form of the first flagged pair and back-fill
    // from that list's ranked alternates.
    const DerivationalFlag& flag = flags.front();
    const bool drop_from_two = flag.word_a.size() <= flag.word_b.size();
    const std::string& victim = drop_from_two ? flag.word_a : flag.word_b;
    std::vector<std::string>& list = drop_from_two ? list_two : list_three;
    std::vector<std::string>& spare = drop_from_two ? spare_two : spare_three;
    list.erase(std::find(list.begin(), list.end(), victim));
    dropped.push_back(victim);

    std::string replacement;
    while (!spare.empty()) {
      std::string candidate = spare.front();
      spare.erase(spare.begin());
      if (!in_either(candidate)) {
        replacement = std::move(candidate);
        break;
      }
    }
    if (replacement.empty())
      throw Error("alternates exhausted while replacing '" + victim +
                  "'; regenerate the word list");
    list.push_back(replacement);
    std::cerr << "dropped '" << victim << "' (" << flag.reason << "), backfilled '" << replacement
              << "'\n";
    flags = derivational_pairs(list_two, list_three);
  }

  std::vector<std::pair<std::string, std::string>> provenance;
  for (const auto& [key, value] : file_two.header) provenance.emplace_back("two." + key, value);
  for (const auto& [key, value] : file_three.header)
    provenance.emplace_back("three." + key, value);
  if (!dropped.empty()) {
    std::string joined;
    for (const std::string& w : dropped) joined += (joined.empty() ? "" : " ") + w;
    provenance.emplace_back("dropped", joined);
  }

  const Alphabet alphabet =
      assemble_alphabet(std::move(list_two), std::move(list_three), flags, std::move(provenance));
  write_file(args.out, format_alphabet_text(alphabet));
  write_file(args.out + ".json", format_alphabet_json(alphabet));
  std::cout << "wrote " << args.out << " and " << args.out << ".json\n";
  return 0;
}

// ---------------------------------------------------------------------------
// encode / decode
// ---------------------------------------------------------------------------

struct CodecArgs {
  std::string alphabet, hex, words, in_file;
  std::optional<std::size_t> expect_len;
};

int run_encode(const CodecArgs& args) {
  const Alphabet alphabet = load_alphabet(args.alphabet);
  std::vector<std::uint8_t> bytes;
  if (!args.hex.empty()) {
    bytes = parse_hex_bytes(args.hex);
  } else if (!args.in_file.empty()) {
    const std::string raw = read_file(args.in_file);
    bytes.assign(raw.begin(), raw.end());
  } else {
    throw Error("encode needs --hex or --in");
  }
  const std::vector<std::string> words = encode_bytes(bytes, alphabet);
  for (std::size_t i = 0; i < words.size(); ++i) std::cout << (i ? " " : "") << words[i];
  std::cout << '\n';
  return 0;
}

int run_decode(const CodecArgs& args) {
  const Alphabet alphabet = load_alphabet(args.alphabet);
  std::string text;
  if (!args.words.empty())
    text = args.words;
  else if (!args.in_file.empty())
    text = read_file(args.in_file);
  else
    throw Error("decode needs --words or --in");

  std::vector<std::string> words;
  std::istringstream in(text);
  std::string w;
  while (in >> w) words.push_back(w);

  const DecodeReport report = decode_words(words, alphabet, args.expect_len);
  std::cout << format_hex_bytes(report.bytes) << '\n';
  for (const DecodeError& e : report.errors)
    std::cerr << "error: position " << e.position << ": " << decode_error_name(e.kind) << ": "
              << e.detail << '\n';
  return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// distance / nearest / code
// ---------------------------------------------------------------------------

struct InspectArgs {
  std::string dict, inventory;
  std::string word_a, word_b;
  std::size_t k = 10;
};

const WordEntry& find_entry(const std::vector<WordEntry>& entries, const std::string& word) {
  const std::string key = to_lower(word);
  const WordEntry* found = nullptr;
  for (const WordEntry& e : entries) {
    if (to_lower(e.spelling) != key) continue;
    if (found) {
      std::cerr << "warning: '" << word << "' has multiple pronunciations; using the first\n";
      break;
    }
    found = &e;
  }
  if (!found) throw Error("word '" + word + "' is not in the dictionary");
  return *found;
}

WordCode encode_entry(const WordEntry& entry, const PhonemeInventory& inventory) {
  const auto kind = template_of(entry);
  if (!kind)
    throw Error("word '" + entry.spelling + "' has " + std::to_string(entry.syllables.size()) +
                " syllables; only 2- and 3-syllable words have codes");
  return encode_word(entry, *kind, inventory);
}

int run_distance(const InspectArgs& args) {
  std::optional<PhonemeInventory> storage;
  const PhonemeInventory& inventory = pick_inventory(args.inventory, storage);
  const ParseResult parsed = parse_dictionary_file(args.dict, inventory);
  const WordCode a = encode_entry(find_entry(parsed.entries, args.word_a), inventory);
  const WordCode b = encode_entry(find_entry(parsed.entries, args.word_b), inventory);
  std::cout << word_distance(a, b) << '\n';
  return 0;
}

int run_nearest(const InspectArgs& args) {
  std::optional<PhonemeInventory> storage;
  const PhonemeInventory& inventory = pick_inventory(args.inventory, storage);
  const ParseResult parsed = parse_dictionary_file(args.dict, inventory);
  const WordEntry& query_entry = find_entry(parsed.entries, args.word_a);
  const WordCode query = encode_entry(query_entry, inventory);

  std::vector<const WordEntry*> pool_entries;
  std::vector<WordCode> pool;
  for (const WordEntry& e : parsed.entries) {
    if (e.syllables.size() != query_entry.syllables.size()) continue;
    try {
      pool.push_back(encode_word(e, query.kind, inventory));
      pool_entries.push_back(&e);
    } catch (const Error&) {
      // words the template cannot hold are simply not comparable
    }
  }
  for (const Neighbor& n : nearest_neighbors(query, pool, args.k))
    std::cout << pool_entries[n.index]->spelling << '\t' << n.distance << '\n';
  return 0;
}

int run_code(const InspectArgs& args) {
  std::optional<PhonemeInventory> storage;
  const PhonemeInventory& inventory = pick_inventory(args.inventory, storage);
  const ParseResult parsed = parse_dictionary_file(args.dict, inventory);
  const WordCode code = encode_entry(find_entry(parsed.entries, args.word_a), inventory);
  std::cout << template_name(code.kind) << ' ' << code.bits.size() << " bits\n"
            << code.bits.to_hex() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radiolex: confusability-spread word lists and byte<->word codecs"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build", "select a maximally distinct word list from a pronunciation dictionary");
  build->add_option("--dict", build_args.dict, "pronunciation dictionary")->required();
  build->add_option("--freq", build_args.freq, "word frequency file");
  build->add_option("--veto", build_args.veto, "words to exclude, one per line");
  build->add_option("--lock", build_args.lock, "words pinned into the result, one per line");
  build->add_option("--template", build_args.template_syllables, "syllables per word (2 or 3)")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  build->add_option("--seed", build_args.seed, "RNG seed (default 42)");
  build->add_option("--generations", build_args.generations, "GA generations (default 500)");
  build->add_option("--population", build_args.population, "GA population size (default 50)");
  build->add_option("--subset", build_args.subset, "words to select (default 256)");
  build->add_option("--elitism", build_args.elitism, "elites kept per generation (default 4)");
  build->add_option("--mutation-swaps", build_args.mutation_swaps,
                    "member swaps per mutation (default 4)");
  build->add_option("--min-freq", build_args.min_freq, "minimum known frequency (default 1)");
  build->add_option("--max-freq", build_args.max_freq, "maximum known frequency (default 84)");
  build->add_option("--min-letters", build_args.min_letters,
                    "minimum spelling length (default 3)");
  build->add_option("--max-cluster", build_args.max_cluster,
                    "maximum consonant cluster length (default 2)");
  build->add_option("--out", build_args.out, "winner word list file")->required();
  build->add_option("--trace", build_args.trace, "per-generation fitness trace file");
  build->add_option("--report", build_args.report, "per-rule rejection report file");
  build->add_option("--inventory", build_args.inventory, "phoneme inventory override");

  AssembleArgs assemble_args;
  CLI::App* assemble =
      app.add_subcommand("assemble", "combine two winner lists into an indexed alphabet");
  assemble->add_option("--two", assemble_args.two, "two-syllable winner list")->required();
  assemble->add_option("--three", assemble_args.three, "three-syllable winner list")->required();
  assemble->add_option("--out", assemble_args.out, "alphabet file (JSON twin written alongside)")
      ->required();
  assemble->add_flag("--auto-drop", assemble_args.auto_drop,
                     "drop the base form of derivational pairs and backfill from alternates");

  CodecArgs encode_args;
  CLI::App* encode = app.add_subcommand("encode", "encode bytes as words");
  encode->add_option("--alphabet", encode_args.alphabet, "alphabet file")->required();
  encode->add_option("--hex", encode_args.hex, "bytes as hex digits, whitespace tolerated");
  encode->add_option("--in", encode_args.in_file, "raw bytes file");

  CodecArgs decode_args;
  std::int64_t expect_len = -1;
  CLI::App* decode = app.add_subcommand("decode", "decode words back to bytes");
  decode->add_option("--alphabet", decode_args.alphabet, "alphabet file")->required();
  decode->add_option("--words", decode_args.words, "whitespace-separated words");
  decode->add_option("--in", decode_args.in_file, "file of whitespace-separated words");
  decode->add_option("--expect-len", expect_len, "expected byte count");

  InspectArgs distance_args;
  CLI::App* distance = app.add_subcommand("distance", "bit distance between two words");
  distance->add_option("wordA", distance_args.word_a)->required();
  distance->add_option("wordB", distance_args.word_b)->required();
  distance->add_option("--dict", distance_args.dict, "pronunciation dictionary")->required();
  distance->add_option("--inventory", distance_args.inventory, "phoneme inventory override");

  InspectArgs nearest_args;
  CLI::App* nearest = app.add_subcommand("nearest", "most confusable dictionary words");
  nearest->add_option("word", nearest_args.word_a)->required();
  nearest->add_option("--k", nearest_args.k, "neighbors to print (default 10)");
  nearest->add_option("--dict", nearest_args.dict, "pronunciation dictionary")->required();
  nearest->add_option("--inventory", nearest_args.inventory, "phoneme inventory override");

  InspectArgs code_args;
  CLI::App* code = app.add_subcommand("code", "hex dump of a word's template code");
  code->add_option("word", code_args.word_a)->required();
  code->add_option("--dict", code_args.dict, "pronunciation dictionary")->required();
  code->add_option("--inventory", code_args.inventory, "phoneme inventory override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (assemble->parsed()) return run_assemble(assemble_args);
    if (encode->parsed()) return run_encode(encode_args);
    if (decode->parsed()) {
      if (expect_len >= 0) decode_args.expect_len = static_cast<std::size_t>(expect_len);
      return run_decode(decode_args);
    }
    if (distance->parsed()) return run_distance(distance_args);
    if (nearest->parsed()) return run_nearest(nearest_args);
    if (code->parsed()) return run_code(code_args);
  } catch (const IoError& e) {
    return exit_io(e.what());
  } catch (const Error& e) {
    return exit_validation(e.what());
  } catch (const std::exception& e) {
    return exit_validation(e.what());
  }
  return 1;
}
