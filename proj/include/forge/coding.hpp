#pragma once

// Cantor pairing and sequence codes.  Every natural number decodes to a
// unique finite sequence, the code of a sequence bounds its length, and
// pair(n,0) < pair(n+1,c) for all c.  The reduction pipeline depends on
// these facts, so they are also verified by test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace forge {

using Code = std::uint64_t;
using Seq = std::vector<Code>;
using Big = boost::multiprecision::cpp_int;

class CodingOverflow : public std::overflow_error {
public:
  CodingOverflow() : std::overflow_error("coding: 64-bit code overflow") {}
};

// pair(x,y) = (x+y)(x+y+1)/2 + y
inline Code pair_code(Code x, Code y) {
  unsigned __int128 s = static_cast<unsigned __int128>(x) + y;
  unsigned __int128 z = s * (s + 1) / 2 + y;
  if (z > static_cast<unsigned __int128>(UINT64_MAX)) throw CodingOverflow();
  return static_cast<Code>(z);
}

inline std::pair<Code, Code> unpair_code(Code z) {
  // s = largest s with s(s+1)/2 <= z
  Code s = static_cast<Code>((std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](unsigned __int128 n) { return n * (n + 1) / 2; };
  while (tri(s + 1) <= z) ++s;
  while (tri(s) > z) --s;
  Code y = z - static_cast<Code>(tri(s));
  return {s - y, y};
}

// seq(<>) = 0, seq(s . <x>) = pair(seq(s), x) + 1
inline Code seq_code(const Seq& s) {
  Code acc = 0;
  for (Code x : s) {
    Code p = pair_code(acc, x);
    if (p == UINT64_MAX) throw CodingOverflow();
    acc = p + 1;
  }
  return acc;
}

inline Seq unseq_code(Code z) {
  Seq out;
  while (z != 0) {
    auto [rest, x] = unpair_code(z - 1);
    out.push_back(x);
    z = rest;  // rest < z, so this terminates
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Arbitrary-precision variants, used for Goedel numbers of fixed-point
// terms (which outgrow 64 bits after a few nesting levels).
inline Big big_pair(const Big& x, const Big& y) {
  Big s = x + y;
  return s * (s + 1) / 2 + y;
}

inline Big big_seq_append(const Big& prefix, const Big& x) {
  return big_pair(prefix, x) + 1;
}

}  // namespace forge
