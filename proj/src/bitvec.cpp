#include "radiolex/bitvec.hpp"

#include <bit>

#include "radiolex/error.hpp"

namespace radiolex {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v;
  for (char c : bits) {
    if (c == '0' || c == '1') {
      v.append_bit(c == '1');
    } else if (c == ' ') {
      continue;  // allow grouped literals in tests
    } else {
      throw Error("BitVec::from_string: invalid character '" + std::string(1, c) + "'");
    }
  }
  return v;
}

bool BitVec::test(std::size_t i) const {
  if (i >= size_) throw Error("BitVec::test: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1u;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= size_) throw Error("BitVec::set: index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

void BitVec::append_bit(bool value) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (value) words_.back() |= std::uint64_t{1} << (size_ % 64);
  ++size_;
}

void BitVec::append_run(bool value, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) append_bit(value);
}

void BitVec::append_value(std::uint32_t value, int width) {
  for (int b = width - 1; b >= 0; --b) append_bit((value >> b) & 1u);
}

void BitVec::append(const BitVec& other) {
  for (std::size_t i = 0; i < other.size_; ++i) append_bit(other.test(i));
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVec::hamming(const BitVec& other) const {
  if (size_ != other.size_) throw Error("BitVec::hamming: size mismatch");
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  return total;
}

std::string BitVec::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(test(i) ? '1' : '0');
  return s;
}

std::string BitVec::to_hex() const {
  static const char* digits = "0123456789ABCDEF";
  std::string s;
  const std::size_t nbytes = (size_ + 7) / 8;
  s.reserve(nbytes * 2);
  for (std::size_t byte = 0; byte < nbytes; ++byte) {
    unsigned value = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      const std::size_t i = byte * 8 + b;
      value = (value << 1) | (i < size_ && test(i) ? 1u : 0u);
    }
    s.push_back(digits[value >> 4]);
    s.push_back(digits[value & 0xF]);
  }
  return s;
}

std::uint64_t BitVec::fnv1a() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  mix(size_);
  for (std::uint64_t w : words_) mix(w);
  return h;
}

}  // namespace radiolex
