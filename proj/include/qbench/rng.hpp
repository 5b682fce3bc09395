#pragma once

#include <array>
#include <cstdint>

namespace qbench {

// Philox 4x32-10 counter-based generator.  Output depends only on
// (key, counter), so independent per-shot streams can be drawn in any
// order (or in parallel) and still reproduce bit-identically.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// One stream per (seed, stream, shot); consecutive draws advance the
// in-shot counter word.
class ShotRng {
 public:
  ShotRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t shot)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        base_{0, static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32),
              stream} {}

  std::uint64_t next_u64();
  double next_double();  // uniform in [0, 1), 53 random bits

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> base_;  // word 0 is the per-shot draw counter
};

}  // namespace qbench
