#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hingen {

using Rng = std::mt19937_64;

inline std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derive a named substream seed from the master seed. Streams with
// different names are statistically independent, so one stage's draws
// never shift another stage's.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a offset basis
  for (char c : stream) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return mix64(master ^ h);
}

inline Rng substream(std::uint64_t master, std::string_view stream) {
  return Rng(derive_seed(master, stream));
}

}  // namespace hingen
