// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. argv[1] names the CLI binary used
// by the end-to-end criteria; omit it to skip those with a FAIL.
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "radiolex/alphabet.hpp"
#include "radiolex/error.hpp"
#include "radiolex/feature_codec.hpp"
#include "radiolex/filters.hpp"
#include "radiolex/lexicon.hpp"
#include "radiolex/metric.hpp"
#include "radiolex/optimizer.hpp"
#include "radiolex/phoneme.hpp"
#include "radiolex/word_codec.hpp"
#include "support.hpp"

using namespace radiolex;
namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REQUIRE_TRUE(cond)                                                      \
  do {                                                                          \
    if (!(cond)) throw Failure("check failed: " #cond " (line " +               \
                               std::to_string(__LINE__) + ")");                 \
  } while (0)

#define REQUIRE_EQ(a, b)                                                        \
  do {                                                                          \
    const auto va = (a);                                                        \
    const auto vb = (b);                                                        \
    if (!(va == vb))                                                            \
      throw Failure("check failed: " #a " == " #b " (line " +                   \
                    std::to_string(__LINE__) + ")");                            \
  } while (0)

std::string g_cli_path;
fs::path g_workdir;

const PhonemeInventory& inv() { return PhonemeInventory::builtin(); }

std::size_t dist(const char* a, const char* b) {
  return phoneme_distance(encode_phoneme(inv(), a), encode_phoneme(inv(), b));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Failure("cannot write " + path.string());
}

int run_cli(const std::string& args, const fs::path& stdout_file) {
  if (g_cli_path.empty()) throw Failure("CLI path not supplied on the command line");
  const std::string cmd =
      g_cli_path + " " + args + " > " + stdout_file.string() + " 2> /dev/null";
  return std::system(cmd.c_str());
}

// --- criteria ---------------------------------------------------------------

void criterion_1_phoneme_coding() {
  REQUIRE_EQ(FeatureVector::kBits, std::size_t{26});
  REQUIRE_EQ(FeatureVector::kPlaceBits, std::size_t{7});
  REQUIRE_EQ(FeatureVector::kMannerBits, std::size_t{6});
  REQUIRE_EQ(FeatureVector::kHeightBits, std::size_t{5});
  REQUIRE_EQ(FeatureVector::kVoicingBits, std::size_t{4});
  for (const Phoneme& p : inv().all()) REQUIRE_EQ(encode_phoneme(p).bits.size(), std::size_t{26});
  REQUIRE_EQ(dist("Z", "S"), std::size_t{4});
  REQUIRE_EQ(dist("N", "D"), std::size_t{1});
  REQUIRE_EQ(dist("L", "R"), std::size_t{1});
  REQUIRE_EQ(dist("D", "G"), std::size_t{2});
  REQUIRE_EQ(dist("D", "T"), std::size_t{4});
  REQUIRE_TRUE(dist("D", "G") < dist("D", "T"));
}

void criterion_2_word_coding() {
  const auto& layout = template_layout(TemplateKind::two_syllable);
  const std::vector<std::size_t> widths = {78, 52, 52, 52, 52, 12, 52, 7};
  REQUIRE_EQ(layout.size(), widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) REQUIRE_EQ(layout[i].width, widths[i]);
  REQUIRE_EQ(template_width(TemplateKind::two_syllable), std::size_t{357});
  std::mt19937_64 rng(0xACC2);
  for (int i = 0; i < 20; ++i)
    REQUIRE_EQ(test::random_word_code(rng, TemplateKind::two_syllable).bits.size(),
               std::size_t{357});
}

void criterion_3_metric_axioms() {
  // Exhaustive over the phoneme inventory.
  std::vector<FeatureVector> phones;
  for (const Phoneme& p : inv().all()) phones.push_back(encode_phoneme(p));
  for (const FeatureVector& a : phones) {
    REQUIRE_EQ(phoneme_distance(a, a), std::size_t{0});
    for (const FeatureVector& b : phones)
      REQUIRE_EQ(phoneme_distance(a, b), phoneme_distance(b, a));
  }

  // 10,000 random valid word-code triples against an independent oracle.
  std::mt19937_64 rng(0xACC3);
  auto oracle = [](const WordCode& a, const WordCode& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.bits.size(); ++i) d += a.bits.test(i) != b.bits.test(i);
    return d;
  };
  for (int iter = 0; iter < 10000; ++iter) {
    const TemplateKind kind =
        iter % 2 == 0 ? TemplateKind::two_syllable : TemplateKind::three_syllable;
    const WordCode x = test::random_word_code(rng, kind);
    const WordCode y = test::random_word_code(rng, kind);
    const WordCode z = test::random_word_code(rng, kind);
    const std::size_t dxy = word_distance(x, y);
    const std::size_t dyz = word_distance(y, z);
    const std::size_t dxz = word_distance(x, z);
    REQUIRE_EQ(word_distance(x, x), std::size_t{0});
    REQUIRE_EQ(dxy, word_distance(y, x));
    REQUIRE_TRUE(dxz <= dxy + dyz);
    REQUIRE_EQ(dxy, oracle(x, y));
  }
}

void criterion_4_blend_midpoint() {
  const std::vector<std::string> oy = {"OY"}, ao = {"AO"}, iy = {"IY"};
  const auto n_oy = encode_nucleus(inv(), oy);
  const auto n_ao = encode_nucleus(inv(), ao);
  const auto n_iy = encode_nucleus(inv(), iy);
  auto d = [](const auto& a, const auto& b) {
    return phoneme_distance(a.first, b.first) + phoneme_distance(a.second, b.second);
  };
  REQUIRE_EQ(d(n_oy, n_ao), d(n_oy, n_iy));
  REQUIRE_EQ(d(n_oy, n_ao) + d(n_oy, n_iy), d(n_ao, n_iy));
}

void criterion_5_stress_weighting() {
  const WordEntry base = test::entry_from_line("dada", "D AA' . D AH");
  const WordEntry initial = test::entry_from_line("dada", "T AA' . D AH");
  const WordEntry medial = test::entry_from_line("dada", "D AA' . T AH");
  const WordCode c0 = encode_word(base, TemplateKind::two_syllable, inv());
  const WordCode c1 = encode_word(initial, TemplateKind::two_syllable, inv());
  const WordCode c2 = encode_word(medial, TemplateKind::two_syllable, inv());
  const std::size_t medial_cost = word_distance(c0, c2);
  const std::size_t initial_cost = word_distance(c0, c1);
  REQUIRE_EQ(medial_cost, std::size_t{4});
  REQUIRE_EQ(initial_cost, std::size_t{8});
  REQUIRE_EQ(initial_cost, 2 * medial_cost);
}

void criterion_6_ga_desk_optimality() {
  std::mt19937_64 rng(0xACC6);
  std::vector<WordCode> pool;
  for (int i = 0; i < 12; ++i) pool.push_back(test::random_word_code(rng, TemplateKind::two_syllable));

  // Brute force over all C(12,4) = 495 subsets.
  Fitness optimum;
  bool first = true;
  std::size_t subsets = 0;
  for (std::uint32_t a = 0; a < 12; ++a)
    for (std::uint32_t b = a + 1; b < 12; ++b)
      for (std::uint32_t c = b + 1; c < 12; ++c)
        for (std::uint32_t d = c + 1; d < 12; ++d) {
          ++subsets;
          const std::vector<std::uint32_t> members = {a, b, c, d};
          const Fitness f = evaluate_fitness(members, pool);
          if (first || f > optimum) {
            optimum = f;
            first = false;
          }
        }
  REQUIRE_EQ(subsets, std::size_t{495});

  GaConfig config;
  config.subset_size = 4;
  config.population_size = 20;
  config.generations = 200;
  config.elitism_count = 2;
  config.mutation_swaps = 1;
  config.rng_seed = 20;
  config.check_invariants = true;
  const EvolveResult r = evolve(pool, config);
  REQUIRE_EQ(r.best.fitness.min_distance, optimum.min_distance);
  for (std::size_t i = 0; i + 1 < r.trace.size(); ++i)
    REQUIRE_TRUE(r.trace[i + 1].best_min >= r.trace[i].best_min);
}

std::string synthetic_dictionary(std::size_t words) {
  // Bijective consonant/vowel enumeration: every pronunciation is distinct,
  // every word survives the default filters.
  const std::vector<std::string> consonants = {"P", "B", "T", "D", "K",  "G",  "F",
                                               "V", "S", "Z", "M", "N",  "L",  "R",
                                               "W", "Y", "SH", "CH", "JH", "HH"};
  const std::vector<std::string> vowels = {"IY", "IH", "EH", "AE", "AA",
                                           "AH", "AO", "UH", "UW", "ER"};
  std::ostringstream out;
  for (std::size_t i = 0; i < words; ++i) {
    std::string spelling = "w";
    spelling.push_back(static_cast<char>('a' + (i / 676) % 26));
    spelling.push_back(static_cast<char>('a' + (i / 26) % 26));
    spelling.push_back(static_cast<char>('a' + i % 26));
    const std::string& c1 = consonants[i % consonants.size()];
    const std::string& v1 = vowels[(i / consonants.size()) % vowels.size()];
    const std::string& c2 = consonants[(i / (consonants.size() * vowels.size())) % consonants.size()];
    const std::string& v2 =
        vowels[(i / (consonants.size() * vowels.size() * consonants.size())) % vowels.size()];
    out << spelling << '\t' << c1 << ' ' << v1 << "' . " << c2 << ' ' << v2 << '\n';
  }
  return out.str();
}

void criterion_7_build_determinism() {
  const fs::path dict = g_workdir / "synth_dict.tsv";
  write_file(dict, synthetic_dictionary(2000));

  std::vector<std::string> outputs;
  for (int run = 1; run <= 2; ++run) {
    const fs::path out = g_workdir / ("winners_" + std::to_string(run) + ".txt");
    const fs::path trace = g_workdir / ("trace_" + std::to_string(run) + ".tsv");
    const fs::path report = g_workdir / ("report_" + std::to_string(run) + ".tsv");
    const fs::path log = g_workdir / ("build_" + std::to_string(run) + ".log");
    const int rc = run_cli("build --dict " + dict.string() +
                               " --template 2 --seed 99 --generations 100 --out " + out.string() +
                               " --trace " + trace.string() + " --report " + report.string(),
                           log);
    if (rc != 0) throw Failure("build run " + std::to_string(run) + " exited nonzero");
    outputs.push_back(read_file(out) + "\x1e" + read_file(trace) + "\x1e" + read_file(report));
  }
  REQUIRE_TRUE(outputs[0] == outputs[1]);
  REQUIRE_TRUE(outputs[0].find("# seed: 99") != std::string::npos);
}

void criterion_8_codec_round_trip() {
  const Alphabet a = test::fixture_alphabet();
  std::mt19937_64 rng(0xACC8);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<std::uint8_t> data(1 + uniform_below(rng, 64));
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    const DecodeReport r = decode_words(encode_bytes(data, a), a);
    REQUIRE_TRUE(r.errors.empty());
    REQUIRE_TRUE(r.bytes == data);
  }
}

void criterion_9_error_detection() {
  const Alphabet a = test::fixture_alphabet();
  std::mt19937_64 rng(0xACC9);
  for (std::size_t len = 4; len <= 16; ++len) {
    for (int sample = 0; sample < 3; ++sample) {
      std::vector<std::uint8_t> data(len);
      for (auto& b : data) b = static_cast<std::uint8_t>(rng());
      const std::vector<std::string> words = encode_bytes(data, a);

      // every single interior omission
      for (std::size_t i = 1; i + 1 < words.size(); ++i) {
        std::vector<std::string> mutated = words;
        mutated.erase(mutated.begin() + static_cast<std::ptrdiff_t>(i));
        REQUIRE_TRUE(!decode_words(mutated, a).errors.empty());
      }
      // every single duplication
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::vector<std::string> mutated = words;
        const std::string dup = mutated[i];
        mutated.insert(mutated.begin() + static_cast<std::ptrdiff_t>(i), dup);
        REQUIRE_TRUE(!decode_words(mutated, a).errors.empty());
      }
      // every adjacent transposition
      for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        std::vector<std::string> mutated = words;
        std::swap(mutated[i], mutated[i + 1]);
        REQUIRE_TRUE(!decode_words(mutated, a).errors.empty());
      }
      // final omission is caught exactly when the length is declared
      std::vector<std::string> trimmed = words;
      trimmed.pop_back();
      REQUIRE_TRUE(decode_words(trimmed, a).errors.empty());
      REQUIRE_TRUE(!decode_words(trimmed, a, len).errors.empty());
    }
  }
}

void criterion_10_sample_rows() {
  const Alphabet a = test::sample_rows_alphabet();
  const std::vector<std::uint8_t> one = {111};
  REQUIRE_TRUE(encode_bytes(one, a) == std::vector<std::string>{"glucose"});
  const std::vector<std::uint8_t> rows = {114, 115};
  const std::vector<std::string> expected = {"granny", "hydraulic"};
  REQUIRE_TRUE(encode_bytes(rows, a) == expected);

  // Same answer through the CLI: 0x6F = 111 -> glucose, 0x74 = 116 -> impartial.
  const fs::path alphabet_file = g_workdir / "sample_rows.alphabet";
  write_file(alphabet_file, format_alphabet_text(a));
  const fs::path out = g_workdir / "encode_out.txt";
  const int rc = run_cli("encode --alphabet " + alphabet_file.string() + " --hex \"6F 74\"", out);
  if (rc != 0) throw Failure("encode exited nonzero");
  REQUIRE_TRUE(read_file(out) == "glucose impartial\n");

  // Decoding the encoder's own output restores the hex and exits 0.
  const fs::path back = g_workdir / "decode_out.txt";
  const int rc2 = run_cli(
      "decode --alphabet " + alphabet_file.string() + " --words \"glucose impartial\"", back);
  if (rc2 != 0) throw Failure("decode exited nonzero");
  REQUIRE_TRUE(read_file(back) == "6F 74\n");
}

void criterion_11_filters() {
  const ParseResult parsed = parse_dictionary(
      "polish\tP AA' . L IH SH\n"
      "Polish\tP OW' . L IH SH\n"
      "strangle\tS T R AE' NG . G AH L\n"
      "granny\tG R AE' . N IY\n"
      "puppy\tP AH' . P IY\n"
      "hockey\tHH AA' . K IY\n",
      inv());
  FilterConfig config;
  config.frequencies = FrequencyMap{{"granny", 84}, {"puppy", 85}, {"hockey", 10},
                                    {"polish", 10}, {"strangle", 10}};
  const FilterOutcome out = filter_candidates(parsed.entries, inv(), config);
  REQUIRE_EQ(out.rejected(FilterRule::ambiguity), std::size_t{2});      // polish/Polish
  REQUIRE_EQ(out.rejected(FilterRule::cluster_length), std::size_t{1}); // strangle
  REQUIRE_EQ(out.rejected(FilterRule::frequency), std::size_t{1});      // puppy at 85
  REQUIRE_EQ(out.pool_two.size(), std::size_t{2});                      // granny at 84, hockey

  // Idempotence on the survivors.
  const FilterOutcome again = filter_candidates(out.pool_two, inv(), config);
  REQUIRE_EQ(again.total_rejected(), std::size_t{0});
  REQUIRE_TRUE(again.pool_two == out.pool_two);
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  g_workdir = fs::temp_directory_path() /
              ("radiolex_acceptance_" + std::to_string(static_cast<unsigned>(::getpid())));
  fs::create_directories(g_workdir);

  const std::vector<Criterion> criteria = {
      {1, "phoneme-coding-conformance", 1.0, criterion_1_phoneme_coding},
      {2, "word-coding-conformance", 1.0, criterion_2_word_coding},
      {3, "metric-axioms-and-oracle", 10.0, criterion_3_metric_axioms},
      {4, "blend-midpoint", 1.0, criterion_4_blend_midpoint},
      {5, "onset-double-weighting", 1.0, criterion_5_stress_weighting},
      {6, "ga-desk-scale-optimality", 10.0, criterion_6_ga_desk_optimality},
      {7, "build-determinism", 120.0, criterion_7_build_determinism},
      {8, "codec-round-trip", 5.0, criterion_8_codec_round_trip},
      {9, "human-error-detection", 30.0, criterion_9_error_detection},
      {10, "published-sample-rows", 1.0, criterion_10_sample_rows},
      {11, "filter-conformance", 5.0, criterion_11_filters},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      c.body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && elapsed > c.budget_seconds)
      problem = "over budget (" + std::to_string(c.budget_seconds) + " s)";
    char line[512];
    std::snprintf(line, sizeof(line), "%s %2d %-28s (%.3f s)%s%s",
                  problem.empty() ? "PASS" : "FAIL", c.number, c.name.c_str(), elapsed,
                  problem.empty() ? "" : ": ", problem.c_str());
    std::cout << line << std::endl;
    if (!problem.empty()) ++failures;
  }

  std::error_code ec;
  fs::remove_all(g_workdir, ec);
  if (failures == 0)
    std::cout << "all " << criteria.size() << " criteria passed" << std::endl;
  else
    std::cout << failures << " criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
