#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/matrix.hpp"

namespace qbench {

// Full state vector over n qubits.  Amplitude index bit k is the state of
// qubit k, so |q4 q3 q2 q1 q0> lives at index q0 + 2*q1 + ... + 16*q4.
class StateVector {
 public:
  explicit StateVector(int num_qubits);  // starts in |0...0>

  void reset_to_basis(std::uint64_t basis_index);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  cdouble amplitude(std::uint64_t basis_index) const { return amps_[basis_index]; }

  // Barriers are ignored; Measure is rejected (measurement is not a state map).
  void apply(const Gate& gate);
  void apply_all(const Circuit& circuit);

  double norm() const;
  double probability(std::uint64_t basis_index) const;

 private:
  int num_qubits_;
  std::vector<cdouble> amps_;
};

// Dense unitary of a measurement-free circuit; limited to 10 qubits.
// Column j is the state the circuit produces from basis state |j>.
Matrix unitary_of(const Circuit& circuit);

}  // namespace qbench
