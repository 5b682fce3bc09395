#pragma once

#include <string>
#include <vector>

namespace qbench {

// Gate set of the target device: single-qubit Cliffords+T, the phase gate
// u1(lambda) = diag(1, e^{i lambda}), CNOT, barriers and final measurements.
enum class GateKind {
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  U1,
  CX,
  Barrier,
  Measure,
};

const char* gate_name(GateKind kind);
bool is_single_qubit(GateKind kind);

struct Gate {
  GateKind kind;
  // 1q gates: {qubit}. CX: {control, target}. Barrier: the fenced qubits,
  // sorted ascending. Measure: {qubit}, result goes to `clbit`.
  std::vector<int> qubits;
  int clbit = -1;
  double lambda = 0.0;  // U1 only

  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate y(int q) { return {GateKind::Y, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {q}}; }
  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate s(int q) { return {GateKind::S, {q}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {q}}; }
  static Gate t(int q) { return {GateKind::T, {q}}; }
  static Gate tdg(int q) { return {GateKind::Tdg, {q}}; }
  static Gate u1(double lambda, int q) { return {GateKind::U1, {q}, -1, lambda}; }
  static Gate cx(int control, int target) { return {GateKind::CX, {control, target}}; }
  static Gate barrier(std::vector<int> qs);
  static Gate measure(int q, int c) { return {GateKind::Measure, {q}, c}; }

  bool operator==(const Gate& other) const = default;
};

}  // namespace qbench
