#include <catch_amalgamated.hpp>

#include "forge/coding.hpp"

using namespace forge;

TEST_CASE("Cantor pairing anchors") {
  CHECK(pair_code(0, 0) == 0);
  CHECK(pair_code(1, 0) == 1);
  CHECK(pair_code(0, 1) == 2);
  CHECK(pair_code(2, 0) == 3);
  CHECK(pair_code(1, 1) == 4);
  CHECK(pair_code(0, 2) == 5);
}

TEST_CASE("unpair inverts pair") {
  for (Code x = 0; x < 60; ++x) {
    for (Code y = 0; y < 60; ++y) {
      auto [a, b] = unpair_code(pair_code(x, y));
      REQUIRE(a == x);
      REQUIRE(b == y);
    }
  }
}

TEST_CASE("pair is monotone in the reduction-relevant sense") {
  // pair(n, 0) < pair(n + 1, c) for every c
  for (Code n = 0; n < 200; ++n) {
    for (Code c = 0; c < 200; ++c) {
      REQUIRE(pair_code(n, 0) < pair_code(n + 1, c));
    }
  }
}

TEST_CASE("sequence code anchors") {
  CHECK(seq_code({}) == 0);
  CHECK(seq_code({0}) == 1);
  CHECK(seq_code({1}) == 3);
  CHECK(seq_code({0, 0}) == pair_code(1, 0) + 1);
}

TEST_CASE("unseq inverts seq and every code decodes") {
  for (Code c = 0; c < 5000; ++c) {
    Seq s = unseq_code(c);
    REQUIRE(seq_code(s) == c);
    // the code bounds the length
    REQUIRE(static_cast<Code>(s.size()) <= c);
  }
}

TEST_CASE("explicit round trips") {
  for (Seq s : {Seq{}, Seq{0}, Seq{5}, Seq{1, 2, 3}, Seq{9, 0, 9}}) {
    CHECK(unseq_code(seq_code(s)) == s);
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  CHECK_THROWS_AS(pair_code(UINT64_MAX, UINT64_MAX), CodingOverflow);
  CHECK_THROWS_AS(seq_code({UINT64_MAX - 1, UINT64_MAX - 1}), CodingOverflow);
}

TEST_CASE("big variants agree with the machine-word codes in range") {
  for (Code x = 0; x < 30; ++x) {
    for (Code y = 0; y < 30; ++y) {
      CHECK(big_pair(Big(x), Big(y)) == Big(pair_code(x, y)));
    }
  }
  CHECK(big_seq_append(Big(0), Big(0)) == Big(seq_code({0})));
  CHECK(big_seq_append(Big(seq_code({1, 2})), Big(3)) == Big(seq_code({1, 2, 3})));
}
