#include "lwcda/rng.hpp"

namespace lwcda {

std::uint64_t substream_seed(std::uint64_t root, std::string_view name,
                             std::uint64_t index) {
  // FNV-1a over the stream name, then two mixing rounds against root/index.
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return mix64(mix64(root ^ h) ^ index);
}

std::mt19937_64 make_rng(std::uint64_t root, std::string_view name,
                         std::uint64_t index) {
  return std::mt19937_64(substream_seed(root, name, index));
}

}  // namespace lwcda
