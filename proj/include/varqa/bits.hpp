#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "varqa/errors.hpp"

namespace varqa {

// Basis states are indices into the 2^M computational basis. Bit o of the
// index holds the occupation of spin orbital o, so the rendered bit-string
// (most significant bit first) places orbital 0 at the rightmost character.
using BasisState = std::uint32_t;

inline int popcount(BasisState s) { return std::popcount(s); }

inline std::string to_bits(BasisState s, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int j = 0; j < n_qubits; ++j)
    if ((s >> (n_qubits - 1 - j)) & 1u) out[static_cast<std::size_t>(j)] = '1';
  return out;
}

inline BasisState from_bits(const std::string& bits) {
  if (bits.size() > 31) throw ShapeError("bit-strings are limited to 31 qubits");
  BasisState s = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("bit-string must contain only 0/1: " + bits);
    s = (s << 1) | static_cast<BasisState>(c == '1');
  }
  return s;
}

// SplitMix64; used to derive independent per-trial seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace varqa
