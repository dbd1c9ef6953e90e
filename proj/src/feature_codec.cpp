#include "radiolex/feature_codec.hpp"

#include "radiolex/error.hpp"

namespace radiolex {

namespace {

void append_thermometer(BitVec& bits, int value, std::size_t width) {
  bits.append_run(true, static_cast<std::size_t>(value));
  bits.append_run(false, width - static_cast<std::size_t>(value));
}

}  // namespace

FeatureVector encode_phoneme(const Phoneme& p) {
  FeatureVector v;
  append_thermometer(v.bits, p.place, FeatureVector::kPlaceBits);
  append_thermometer(v.bits, p.manner, FeatureVector::kMannerBits);
  append_thermometer(v.bits, p.height, FeatureVector::kHeightBits);
  v.bits.append_run(p.voiced, FeatureVector::kVoicingBits);
  v.bits.append_bit(p.syllabic);
  v.bits.append_bit(p.nasal);
  v.bits.append_bit(p.lateral);
  v.bits.append_bit(p.rounded);
  return v;
}

FeatureVector encode_phoneme(const PhonemeInventory& inventory, std::string_view symbol) {
  return encode_phoneme(inventory.require(symbol));
}

FeatureVector silence_vector() {
  FeatureVector v;
  v.bits.append_run(false, FeatureVector::kBits);
  return v;
}

std::size_t phoneme_distance(const FeatureVector& a, const FeatureVector& b) {
  return a.bits.hamming(b.bits);
}

std::pair<FeatureVector, FeatureVector> encode_nucleus(const PhonemeInventory& inventory,
                                                       std::span<const std::string> nucleus) {
  // Expand diphthongs into their component vowels; a pure vowel is presented
  // twice so blends land exactly mid-way between their components.
  std::vector<const Phoneme*> components;
  for (const std::string& symbol : nucleus) {
    const Phoneme& p = inventory.require(symbol);
    if (!p.syllabic) throw Error("nucleus contains non-vowel " + p.symbol);
    if (p.blend) {
      components.push_back(&inventory.require(p.blend->first));
      components.push_back(&inventory.require(p.blend->second));
    } else {
      components.push_back(&p);
    }
  }
  if (components.empty()) throw Error("empty nucleus");
  if (components.size() == 1) {
    FeatureVector v = encode_phoneme(*components[0]);
    return {v, v};
  }
  if (components.size() == 2)
    return {encode_phoneme(*components[0]), encode_phoneme(*components[1])};
  throw Error("nucleus wider than two vowel slots");
}

}  // namespace radiolex
