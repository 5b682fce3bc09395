#include "qbench/circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace qbench;

TEST(Circuit, RegisterBounds) {
  EXPECT_THROW(Circuit(0, 0), std::invalid_argument);
  EXPECT_THROW(Circuit(-1, 0), std::invalid_argument);
  EXPECT_THROW(Circuit(1, -1), std::invalid_argument);
  EXPECT_NO_THROW(Circuit(1, 0));  // classical register may be empty
}

TEST(Circuit, AppendValidatesIndices) {
  Circuit c(2, 2);
  EXPECT_THROW(c.x(2), std::out_of_range);
  EXPECT_THROW(c.x(-1), std::out_of_range);
  EXPECT_THROW(c.cx(0, 2), std::out_of_range);
  EXPECT_THROW(c.measure(0, 2), std::out_of_range);
  EXPECT_THROW(c.measure(0, -1), std::out_of_range);
  EXPECT_EQ(c.size(), 0u);
}

TEST(Circuit, CxNeedsDistinctQubits) {
  Circuit c(2, 0);
  EXPECT_THROW(c.cx(1, 1), std::invalid_argument);
}

TEST(Circuit, AngleMustBeFinite) {
  Circuit c(1, 0);
  EXPECT_THROW(c.u1(std::nan(""), 0), std::invalid_argument);
  EXPECT_THROW(c.u1(INFINITY, 0), std::invalid_argument);
  EXPECT_NO_THROW(c.u1(-3.5, 0));
}

TEST(Circuit, BarrierRejectsDuplicatesAndBadIndices) {
  Circuit c(3, 0);
  EXPECT_THROW(c.barrier({0, 0}), std::invalid_argument);
  EXPECT_THROW(c.barrier({0, 3}), std::out_of_range);
  EXPECT_THROW(c.barrier({}), std::invalid_argument);
  EXPECT_NO_THROW(c.barrier({2, 0}));
}

TEST(Circuit, MeasurementIsTerminalPerQubit) {
  Circuit c(2, 2);
  c.h(0).measure(0, 0);
  EXPECT_THROW(c.x(0), std::invalid_argument);
  EXPECT_THROW(c.cx(0, 1), std::invalid_argument);
  EXPECT_THROW(c.cx(1, 0), std::invalid_argument);
  EXPECT_THROW(c.measure(0, 1), std::invalid_argument);
  EXPECT_NO_THROW(c.x(1));  // untouched qubit still usable
  EXPECT_NO_THROW(c.measure(1, 1));
}

TEST(Circuit, CountsAndPredicates) {
  Circuit c(3, 3);
  c.h(0).h(1).cx(0, 1).t(2).barrier({0, 1, 2}).measure(0, 0);
  EXPECT_EQ(c.count_kind(GateKind::H), 2u);
  EXPECT_EQ(c.count_kind(GateKind::CX), 1u);
  EXPECT_EQ(c.count_kind(GateKind::T), 1u);
  EXPECT_EQ(c.count_kind(GateKind::Barrier), 1u);
  EXPECT_EQ(c.count_kind(GateKind::Measure), 1u);
  EXPECT_TRUE(c.has_measure());
  EXPECT_FALSE(Circuit(1, 0).has_measure());
}

TEST(Circuit, EqualityIgnoresName) {
  Circuit a(2, 2, "left");
  Circuit b(2, 2, "right");
  a.h(0).cx(0, 1).measure(1, 0);
  b.h(0).cx(0, 1).measure(1, 0);
  EXPECT_EQ(a, b);
  b.set_name("left");
  Circuit c(2, 2, "left");
  c.h(0).cx(1, 0).measure(1, 0);
  EXPECT_FALSE(a == c);
  EXPECT_FALSE(a == Circuit(2, 1));
}

TEST(Circuit, BarrierQubitsAreSorted) {
  Circuit c(3, 0);
  c.barrier({2, 0, 1});
  EXPECT_EQ(c.gates()[0].qubits, (std::vector<int>{0, 1, 2}));
  Circuit d(3, 0);
  d.barrier({0, 1, 2});
  EXPECT_EQ(c, d);
}

TEST(Circuit, ConcatRequiresMatchingRegisters) {
  Circuit a(2, 2);
  a.h(0);
  Circuit b(2, 2);
  b.cx(0, 1);
  Circuit joined = concat(a, b);
  EXPECT_EQ(joined.size(), 2u);
  EXPECT_EQ(joined.gates()[1].kind, GateKind::CX);
  EXPECT_THROW(concat(a, Circuit(3, 2)), std::invalid_argument);
  EXPECT_THROW(concat(a, Circuit(2, 1)), std::invalid_argument);
}

TEST(Circuit, ConcatRespectsMeasuredQubits) {
  Circuit a(2, 2);
  a.measure(0, 0);
  Circuit b(2, 2);
  b.x(0);
  EXPECT_THROW(concat(a, b), std::invalid_argument);
}
