#ifndef RADIOLEX_BITVEC_HPP
#define RADIOLEX_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace radiolex {

/// Fixed-order bit string backed by 64-bit words. Bit 0 is the first bit of
/// the layout; trailing bits of the last word are kept zero so equality and
/// popcount work on the raw words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : size_(nbits), words_((nbits + 63) / 64, 0) {}

  /// Parse a string of '0'/'1' characters, first character = bit 0.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const;
  void set(std::size_t i, bool value);

  void append_bit(bool value);
  void append_run(bool value, std::size_t count);
  /// Append `width` bits of `value`, most significant first.
  void append_value(std::uint32_t value, int width);
  void append(const BitVec& other);

  std::size_t popcount() const;
  /// Number of differing bits; both operands must have equal size.
  std::size_t hamming(const BitVec& other) const;

  std::string to_string() const;
  /// Uppercase hex, 8 bits per byte with bit 0 at the byte's MSB; the final
  /// partial byte is zero-padded.
  std::string to_hex() const;

  /// FNV-1a over size and words (stable across platforms).
  std::uint64_t fnv1a() const;

  bool operator==(const BitVec& other) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace radiolex

#endif
