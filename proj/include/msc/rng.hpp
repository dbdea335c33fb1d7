#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace msc {

// splitmix64: tiny, deterministic across platforms, good enough for sampling
// instance parameters. std::uniform_int_distribution is implementation
// defined, so the mapping to a range is done by hand.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // inclusive bounds; span is tiny in all callers, modulo bias is irrelevant
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }
};

// FNV-1a over the bytes of a canonical text encoding. Stable across runs,
// platforms and compilers, which the resume and audit paths rely on.
std::uint64_t stable_hash64(std::string_view bytes);

// Per-instance seed: hash of master seed, canonical necklace beads and index.
std::uint64_t instance_seed(std::uint64_t master_seed, const std::vector<int>& beads,
                            std::uint64_t index);

}  // namespace msc
