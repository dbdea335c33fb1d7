#include "msc/rng.hpp"

namespace msc {

std::uint64_t stable_hash64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t instance_seed(std::uint64_t master_seed, const std::vector<int>& beads,
                            std::uint64_t index) {
  std::string enc = "seed=" + std::to_string(master_seed) + ";necklace=";
  for (size_t i = 0; i < beads.size(); ++i) {
    if (i) enc += '-';
    enc += std::to_string(beads[i]);
  }
  enc += ";index=" + std::to_string(index);
  return stable_hash64(enc);
}

}  // namespace msc
