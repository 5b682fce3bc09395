#include "qbench/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbench {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::U1: return "u1";
    case GateKind::CX: return "cx";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
  }
  return "?";
}

bool is_single_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::U1:
      return true;
    default:
      return false;
  }
}

Gate Gate::barrier(std::vector<int> qs) {
  std::sort(qs.begin(), qs.end());
  return {GateKind::Barrier, std::move(qs)};
}

Circuit::Circuit(int num_qubits, int num_clbits, std::string name)
    : num_qubits_(num_qubits),
      num_clbits_(num_clbits),
      name_(std::move(name)),
      measured_(static_cast<std::size_t>(std::max(num_qubits, 0)), false) {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  if (num_clbits < 0) throw std::invalid_argument("negative classical register size");
}

Circuit& Circuit::append(Gate gate) {
  if (gate.qubits.empty()) throw std::invalid_argument("gate without qubits");
  for (int q : gate.qubits) {
    if (q < 0 || q >= num_qubits_) throw std::out_of_range("qubit index out of range");
    if (measured_[static_cast<std::size_t>(q)])
      throw std::invalid_argument("gate after measurement on qubit " + std::to_string(q));
  }
  switch (gate.kind) {
    case GateKind::CX:
      if (gate.qubits.size() != 2 || gate.qubits[0] == gate.qubits[1])
        throw std::invalid_argument("cx needs two distinct qubits");
      break;
    case GateKind::U1:
      if (!std::isfinite(gate.lambda)) throw std::invalid_argument("non-finite u1 angle");
      [[fallthrough]];
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
      if (gate.qubits.size() != 1)
        throw std::invalid_argument("single-qubit gate needs exactly one qubit");
      break;
    case GateKind::Barrier: {
      auto qs = gate.qubits;
      if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
        throw std::invalid_argument("duplicate qubit in barrier");
      break;
    }
    case GateKind::Measure:
      if (gate.qubits.size() != 1)
        throw std::invalid_argument("measure needs exactly one qubit");
      if (gate.clbit < 0 || gate.clbit >= num_clbits_)
        throw std::out_of_range("clbit index out of range");
      measured_[static_cast<std::size_t>(gate.qubits[0])] = true;
      break;
  }
  gates_.push_back(std::move(gate));
  return *this;
}

std::size_t Circuit::count_kind(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [kind](const Gate& g) { return g.kind == kind; }));
}

bool Circuit::has_measure() const {
  return count_kind(GateKind::Measure) > 0;
}

bool Circuit::operator==(const Circuit& other) const {
  return num_qubits_ == other.num_qubits_ && num_clbits_ == other.num_clbits_ &&
         gates_ == other.gates_;
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.num_qubits() != b.num_qubits() || a.num_clbits() != b.num_clbits())
    throw std::invalid_argument("concat register mismatch");
  Circuit out = a;
  for (const Gate& g : b.gates()) out.append(g);
  return out;
}

}  // namespace qbench
