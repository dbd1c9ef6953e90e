#include <doctest.h>

#include <random>

#include "radiolex/bitvec.hpp"
#include "radiolex/error.hpp"

using namespace radiolex;

TEST_SUITE("bitvec") {

TEST_CASE("string round trip and bit access") {
  BitVec v = BitVec::from_string("1011 0001");
  CHECK(v.size() == 8);
  CHECK(v.to_string() == "10110001");
  CHECK(v.test(0));
  CHECK_FALSE(v.test(1));
  v.set(1, true);
  CHECK(v.to_string() == "11110001");
  CHECK(v.popcount() == 5);
  CHECK_THROWS_AS(v.test(8), Error);
  CHECK_THROWS_AS(BitVec::from_string("10x"), Error);
}

TEST_CASE("append_value is most significant bit first") {
  BitVec v;
  v.append_value(6, 6);
  CHECK(v.to_string() == "000110");
  v.append_value(14, 6);
  CHECK(v.to_string() == "000110001110");
}

TEST_CASE("append_run and append") {
  BitVec v;
  v.append_run(true, 4);
  v.append_run(false, 3);
  BitVec w = BitVec::from_string("01");
  v.append(w);
  CHECK(v.to_string() == "111100001");
}

TEST_CASE("hamming matches a per-bit oracle on random vectors") {
  std::mt19937_64 rng(0xB17);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 400;
    BitVec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, rng() & 1);
      b.set(i, rng() & 1);
    }
    std::size_t expected = 0;
    for (std::size_t i = 0; i < n; ++i) expected += a.test(i) != b.test(i);
    CHECK(a.hamming(b) == expected);
    CHECK(b.hamming(a) == expected);
  }
}

TEST_CASE("hamming rejects size mismatch") {
  CHECK_THROWS_AS(BitVec(5).hamming(BitVec(6)), Error);
}

TEST_CASE("hex dump packs bit 0 at the first byte's MSB") {
  CHECK(BitVec::from_string("00000001").to_hex() == "01");
  CHECK(BitVec::from_string("10000000").to_hex() == "80");
  CHECK(BitVec::from_string("1111").to_hex() == "F0");  // partial byte zero-padded
  CHECK(BitVec::from_string("0101110000111001").to_hex() == "5C39");
}

TEST_CASE("equality tracks size and content") {
  CHECK(BitVec::from_string("101") == BitVec::from_string("101"));
  CHECK(BitVec::from_string("101") != BitVec::from_string("1010"));
  CHECK(BitVec::from_string("101") != BitVec::from_string("100"));
}

}  // TEST_SUITE
