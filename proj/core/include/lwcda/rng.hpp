#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lwcda {

/// splitmix64 finalizer; decorrelates structured seed material.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derive the seed of a named substream from a root seed. Every random stage
/// (topology, CH election, alpha signs, planted supports, ...) draws from its
/// own (name, index) substream so stages stay independently reproducible and
/// can run in parallel without sharing generator state.
std::uint64_t substream_seed(std::uint64_t root, std::string_view name,
                             std::uint64_t index = 0);

std::mt19937_64 make_rng(std::uint64_t root, std::string_view name,
                         std::uint64_t index = 0);

}  // namespace lwcda
