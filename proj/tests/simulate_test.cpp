#include "qbench/simulate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "qbench/analysis.hpp"
#include "qbench/circuit.hpp"

using namespace qbench;

TEST(RunExact, RequiresAMeasurement) {
  Circuit c(1, 1);
  c.x(0);
  EXPECT_THROW(run_exact(c), std::invalid_argument);
}

TEST(RunExact, BellPairSplitsEvenly) {
  Circuit c(2, 2);
  c.h(0).cx(0, 1).measure(0, 0).measure(1, 1);
  auto probs = run_exact(c);
  ASSERT_EQ(probs.size(), 2u);
  EXPECT_NEAR(probs.at("00"), 0.5, 1e-15);
  EXPECT_NEAR(probs.at("11"), 0.5, 1e-15);
}

// Keys are classical-register strings with clbit 0 rightmost; qubits the
// measure map skips marginalize away, unmeasured clbits read 0.
TEST(RunExact, MeasureMapControlsKeyLayout) {
  Circuit c(3, 3);
  c.x(0).h(2);              // qubit 1 stays |0>, qubit 2 is in superposition
  c.measure(0, 2);          // qubit 0 lands in the leftmost bit
  auto probs = run_exact(c);
  ASSERT_EQ(probs.size(), 1u);  // qubit 2 marginalizes out entirely
  EXPECT_NEAR(probs.at("100"), 1.0, 1e-15);

  Circuit d(2, 4);
  d.x(1).measure(1, 0).measure(0, 3);
  auto p2 = run_exact(d);
  EXPECT_NEAR(p2.at("0001"), 1.0, 1e-15);
}

TEST(RunExact, DropsZeroProbabilityKeys) {
  Circuit c(2, 2);
  c.x(0).measure(0, 0).measure(1, 1);
  auto probs = run_exact(c);
  EXPECT_EQ(probs.size(), 1u);
  EXPECT_EQ(probs.count("00"), 0u);
}

TEST(Sample, DeterministicInSeedAndSensitiveToIt) {
  Circuit c(2, 2);
  c.h(0).cx(0, 1).measure(0, 0).measure(1, 1);
  CountsTable a = sample(c, 4096, 7);
  CountsTable b = sample(c, 4096, 7);
  EXPECT_EQ(a.counts, b.counts);
  CountsTable other = sample(c, 4096, 8);
  EXPECT_NE(a.counts, other.counts);
  EXPECT_EQ(a.shots, 4096u);
  std::uint64_t total = 0;
  for (const auto& [key, n] : a.counts) total += n;
  EXPECT_EQ(total, 4096u);
}

TEST(Sample, FrequenciesTrackTheExactDistribution) {
  Circuit c(2, 2);
  c.h(0).h(1).measure(0, 0).measure(1, 1);
  const std::uint64_t shots = 8192;
  CountsTable t = sample(c, shots, 1);
  auto freqs = rel_freqs(t);
  double bound = 5.0 * se_bound(shots);
  for (const char* key : {"00", "01", "10", "11"}) {
    ASSERT_TRUE(freqs.count(key)) << key;
    EXPECT_NEAR(freqs.at(key), 0.25, bound) << key;
  }
}

TEST(Sample, PointMassIsExact) {
  Circuit c(3, 3);
  c.x(0).x(2).measure(0, 0).measure(1, 1).measure(2, 2);
  CountsTable t = sample(c, 1000, 99);
  ASSERT_EQ(t.counts.size(), 1u);
  EXPECT_EQ(t.counts.at("101"), 1000u);
}

TEST(RunNoisy, PerfectGatesMatchSamplingBitExactly) {
  Circuit c(2, 2);
  c.h(0).cx(0, 1).t(1).h(1).measure(0, 0).measure(1, 1);
  NoiseModel clean;  // p_correct = 1
  CountsTable noisy = run_noisy(c, 2048, 42, clean);
  CountsTable ideal = sample(c, 2048, 42);
  EXPECT_EQ(noisy.counts, ideal.counts);
}

// A chain of m X gates on one qubit under bit-flip noise ends in the correct
// state exactly when no gate fails, so P(correct) = p^m.  With p = 0.95 and
// m = 20 that is 0.3585.
TEST(RunNoisy, TwentyGateChainHitsPowerLaw) {
  Circuit c(1, 1);
  for (int i = 0; i < 20; ++i) c.x(0);
  c.measure(0, 0);
  NoiseModel noise{0.95, NoiseChannel::BitFlip};
  const std::uint64_t shots = 8192;
  CountsTable t = run_noisy(c, shots, 1, noise);
  const std::string correct = "0";  // 20 X gates return qubit 0 to |0>
  double freq = static_cast<double>(t.counts.at(correct)) / static_cast<double>(shots);
  double expect = predict_success(0.95, 20);
  EXPECT_NEAR(expect, 0.3585, 5e-4);
  EXPECT_NEAR(freq, expect, 5.0 * se_bound(shots));
}

TEST(RunNoisy, FirstErrorModelOnShortChain) {
  // Two X gates with heavy bit-flip noise: the shot ends correct only when
  // both pass (p^2 = 0.25).  The first failure adds one extra flip and the
  // model injects nothing after it, so every failed shot reads "1".
  Circuit c(1, 1);
  c.x(0).x(0).measure(0, 0);
  NoiseModel noise{0.5, NoiseChannel::BitFlip};
  CountsTable t = run_noisy(c, 8192, 3, noise);
  double f0 = static_cast<double>(t.counts.at("0")) / 8192.0;
  EXPECT_NEAR(f0, 0.25, 5.0 * se_bound(8192));
}

TEST(RunNoisy, DepolarizingSpreadsOverPaulis) {
  // |0> with one noisy identity-ish gate: under depolarizing, X and Y errors
  // flip the measured bit, Z does not, so the wrong rate is 2/3 of the error
  // rate.
  Circuit c(1, 1);
  c.z(0).measure(0, 0);
  NoiseModel noise{0.4, NoiseChannel::Depolarizing};
  CountsTable t = run_noisy(c, 8192, 5, noise);
  double wrong = static_cast<double>(t.counts.at("1")) / 8192.0;
  EXPECT_NEAR(wrong, 0.6 * 2.0 / 3.0, 5.0 * se_bound(8192));
}

TEST(RunNoisy, RejectsBadProbability) {
  Circuit c(1, 1);
  c.x(0).measure(0, 0);
  EXPECT_THROW(run_noisy(c, 10, 0, NoiseModel{-0.1, NoiseChannel::BitFlip}),
               std::invalid_argument);
  EXPECT_THROW(run_noisy(c, 10, 0, NoiseModel{1.5, NoiseChannel::BitFlip}),
               std::invalid_argument);
}

TEST(RunNoisy, CountsCarryCircuitMetadata) {
  Circuit c(1, 1, "chain");
  c.x(0).measure(0, 0);
  CountsTable t = run_noisy(c, 64, 9, NoiseModel{0.9, NoiseChannel::BitFlip});
  EXPECT_EQ(t.circuit_name, "chain");
  EXPECT_EQ(t.shots, 64u);
  ASSERT_TRUE(t.seed.has_value());
  EXPECT_EQ(*t.seed, 9u);
  t.validate();
}
