#include "qbench/counts.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace qbench;

namespace {
CountsTable sample_table() {
  CountsTable t;
  t.backend = "ideal-sim";
  t.date = "2017-01-16T09:00:00Z";
  t.shots = 8192;
  t.seed = 42;
  t.counts = {{"00", 4100}, {"11", 4092}};
  t.circuit_name = "bell";
  return t;
}
}  // namespace

TEST(CountsTable, KeyWidthAndValidate) {
  CountsTable t = sample_table();
  EXPECT_EQ(t.key_width(), 2u);
  EXPECT_NO_THROW(t.validate());

  CountsTable bad = sample_table();
  bad.counts["101"] = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);

  bad = sample_table();
  bad.counts["0x"] = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);

  bad = sample_table();
  bad.shots = 8000;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(CountsJson, RoundTripPreservesEverything) {
  CountsTable t = sample_table();
  CountsTable back = counts_from_json(counts_to_json(t));
  EXPECT_EQ(back.backend, t.backend);
  EXPECT_EQ(back.date, t.date);
  EXPECT_EQ(back.shots, t.shots);
  EXPECT_EQ(back.seed, t.seed);
  EXPECT_EQ(back.counts, t.counts);
  EXPECT_EQ(back.circuit_name, t.circuit_name);
}

TEST(CountsJson, NullSeedRoundTrips) {
  CountsTable t = sample_table();
  t.seed.reset();
  CountsTable back = counts_from_json(counts_to_json(t));
  EXPECT_FALSE(back.seed.has_value());
}

TEST(CountsJson, RejectsMalformedInput) {
  EXPECT_THROW(counts_from_json("{"), std::invalid_argument);
  EXPECT_THROW(counts_from_json("[]"), std::invalid_argument);
  EXPECT_THROW(counts_from_json(R"({"backend":"x"})"), std::invalid_argument);
  // counts not matching shots is a schema violation, not just a warning
  EXPECT_THROW(counts_from_json(
                   R"({"backend":"x","date":"","shots":10,"seed":null,"counts":{"0":3}})"),
               std::invalid_argument);
}

TEST(CountsJson, ParsesHardwareStyleTable) {
  const char* text = R"({
    "backend": "ibmqe",
    "date": "2017-01-22T00:00:00Z",
    "shots": 4,
    "seed": null,
    "counts": {"01": 1, "10": 3},
    "circuit_name": "t1k00_t2k04"
  })";
  CountsTable t = counts_from_json(text);
  EXPECT_EQ(t.shots, 4u);
  EXPECT_EQ(t.counts.at("10"), 3u);
  EXPECT_EQ(t.circuit_name, "t1k00_t2k04");
}

TEST(Timestamp, LooksLikeUtcIso) {
  std::string ts = utc_timestamp_now();
  ASSERT_EQ(ts.size(), 20u);
  EXPECT_EQ(ts[4], '-');
  EXPECT_EQ(ts[10], 'T');
  EXPECT_EQ(ts[19], 'Z');
}
