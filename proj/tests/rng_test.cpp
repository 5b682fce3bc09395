#include "qbench/rng.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qbench;

// Reference known-answer vectors for the 10-round 4x32 generator.
TEST(Philox, KnownAnswerVectors) {
  auto zero = philox4x32({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(zero[0], 0x6627e8d5u);
  EXPECT_EQ(zero[1], 0xe169c58du);
  EXPECT_EQ(zero[2], 0xbc57ac4cu);
  EXPECT_EQ(zero[3], 0x9b00dbd8u);

  auto ones = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                         {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(ones[0], 0x408f276du);
  EXPECT_EQ(ones[1], 0x41c83b0eu);
  EXPECT_EQ(ones[2], 0xa20bc7c6u);
  EXPECT_EQ(ones[3], 0x6d5451fdu);
}

TEST(ShotRng, GoldenDraws) {
  EXPECT_EQ(ShotRng(0, 0, 0).next_u64(), 0x6627e8d5e169c58dull);
  ShotRng r(0, 0, 0);
  r.next_u64();
  EXPECT_EQ(r.next_u64(), 0xf8e4cca45cb200dbull);  // draw counter advanced
  EXPECT_EQ(ShotRng(1, 0, 0).next_u64(), 0xe3e80670e50a0ebcull);
  EXPECT_EQ(ShotRng(0, 1, 0).next_u64(), 0x2dce73e51348e23full);
  EXPECT_EQ(ShotRng(0, 0, 1).next_u64(), 0x6ad0c5ecea236249ull);
  ShotRng big(0xDEADBEEFCAFEBABEull, 3, 12345);
  big.next_u64();
  big.next_u64();
  EXPECT_EQ(big.next_u64(), 0x8fc6e02d56e3ce88ull);
}

TEST(ShotRng, DoubleIsUnitIntervalWith53Bits) {
  EXPECT_DOUBLE_EQ(ShotRng(0, 0, 0).next_double(),
                   static_cast<double>(0x6627e8d5e169c58dull >> 11) * 0x1.0p-53);
  ShotRng r(42, 0, 0);
  for (int i = 0; i < 1000; ++i) {
    double u = r.next_double();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

// The whole point of a counter-based generator: streams never collide and
// can be drawn in any order.
TEST(ShotRng, StreamsAreIndependentOfDrawOrder) {
  std::set<std::uint64_t> seen;
  for (std::uint32_t stream = 0; stream < 4; ++stream) {
    for (std::uint64_t shot = 0; shot < 64; ++shot) {
      seen.insert(ShotRng(7, stream, shot).next_u64());
    }
  }
  EXPECT_EQ(seen.size(), 4u * 64u);

  ShotRng forward(9, 2, 5);
  std::uint64_t first = forward.next_u64();
  ShotRng other(9, 2, 6);
  other.next_u64();
  ShotRng again(9, 2, 5);
  EXPECT_EQ(again.next_u64(), first);
}

TEST(ShotRng, SeedWordsBothMatter) {
  EXPECT_NE(ShotRng(1, 0, 0).next_u64(), ShotRng(1ull << 32, 0, 0).next_u64());
  EXPECT_NE(ShotRng(0, 0, 1).next_u64(), ShotRng(0, 0, 1ull << 32).next_u64());
}
