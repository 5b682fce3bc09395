#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qbench/circuit.hpp"
#include "qbench/counts.hpp"

namespace qbench {

// Exact outcome distribution over the classical register.  Unmeasured
// clbits read 0; dropping qubits marginalizes by summing probabilities.
// Requires at least one Measure gate.
std::map<std::string, double> run_exact(const Circuit& circuit);

// Multinomial sampling from run_exact via one counter-based draw per shot:
// the same (circuit, shots, seed) always yields the same table.
CountsTable sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed);

enum class NoiseChannel { BitFlip, Depolarizing };

struct NoiseModel {
  double p_correct = 1.0;  // per-gate success probability
  NoiseChannel channel = NoiseChannel::BitFlip;
};

// Stochastic gate-error simulation.  Per shot the gates are scanned in
// order; each non-measure gate fails with probability 1 - p_correct, and the
// first failure injects the channel's error on every qubit the gate touched
// (BitFlip: X; Depolarizing: a uniform random Pauli per qubit).  A failed
// shot stays failed: no later gate fires another error, which makes the
// probability of an m-gate sequence finishing unharmed exactly p_correct^m.
CountsTable run_noisy(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                      const NoiseModel& noise);

}  // namespace qbench
